#pragma once

#include <map>
#include <vector>

#include "thomae/periods.hpp"
#include "thomae/theta.hpp"

namespace thomae {

struct ThomaeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nearest root of unity of the given order.
cplx snap_root(cplx z, int order);
// |L - e R| / max(|L|, |R|)
double phase_residual(cplx lhs, cplx rhs, cplx e);

cplx first_thomae_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& I0);
cplx second_thomae_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& I1, int n);
CVec second_thomae_rhs_vec(const CurveSpec& spec, const PeriodData& pd, const IndexSet& I1);

// Order-m tensor of the General Thomae right side, dense g^m storage.
std::vector<cplx> general_thomae_tensor(const CurveSpec& spec, const PeriodData& pd, const IndexSet& Im,
                                        const IndexSet& K);
cplx general_thomae_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& Im,
                        const std::vector<int>& multi_index, const IndexSet& K);
cplx general_thomae_ratio_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& Im,
                              const std::vector<int>& multi_index, const IndexSet& K, const IndexSet& I0);
// Admissible K: subsets of the finite part of J_m with |I_m finite| + |K| = g.
std::vector<IndexSet> thomae_k_choices(const CurveSpec& spec, const IndexSet& Im);

struct PhaseEntry {
    HalfChar ch;
    IndexSet I0;
    cplx phase;           // snapped 8th root
    double residual = 0;  // |raw - snapped|
    double modulus_error = 0;
};

struct PhaseCalibration {
    std::map<std::uint32_t, PhaseEntry> entries;
    double max_residual = 0.0;
    const PhaseEntry& at(const HalfChar& c) const;
};

PhaseCalibration calibrate_phases(const CurveSpec& spec, const PeriodData& pd, const ThetaTable& table,
                                  double fail_above = 1e-4);

}  // namespace thomae
