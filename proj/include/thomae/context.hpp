#pragma once

#include <memory>

#include "thomae/periods.hpp"
#include "thomae/theta.hpp"
#include "thomae/thomae.hpp"

namespace thomae {

// Everything the relation checks need for one curve.
struct CurveContext {
    CurveSpec spec;
    PeriodData periods;
    std::shared_ptr<const ThetaEngine> engine;
    std::shared_ptr<ThetaTable> table;

    int genus() const { return spec.genus; }
    const ThetaTable& th() const { return *table; }
};

struct ContextOptions {
    int quad_order = 96;
    double theta_tol = 1e-12;
    int max_order = 3;
    bool fill = false;  // evaluate every characteristic up front
};

CurveContext make_context(const CurveSpec& spec, const ContextOptions& opt = {});
CurveContext make_context(const CurveSpec& spec, const PeriodData& pd, const ContextOptions& opt = {});

}  // namespace thomae
