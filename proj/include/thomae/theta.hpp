#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <vector>

#include "thomae/characteristics.hpp"
#include "thomae/periods.hpp"

namespace thomae {

struct ThetaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ThetaParams {
    CMat tau;
    double tol = 1e-12;
    double radius_warn = 12.0;  // warn when the cutoff radius exceeds this
};

// Fully symmetric order-m tensor in dimension g, dense storage g^m.
struct DerivThetaTensor {
    int g = 0;
    int order = 0;
    HalfChar ch;
    std::vector<cplx> entries;
    double scale = 0.0;  // largest single |term| of the sum

    cplx at(std::initializer_list<int> idx) const;
    cplx at(const std::vector<int>& idx) const;
    cplx value() const { return entries.at(0); }
    CVec vec() const;   // order 1
    CMat mat() const;   // order 2
    double max_abs() const;
};

// Radius R of the ellipsoid ||L c|| <= R, L^t L = pi Im tau, covering the
// sum to absolute tolerance tol for derivative order up to `order`.
double truncation_radius(const CMat& tau, double tol, int order = 0);

class ThetaEngine {
public:
    explicit ThetaEngine(ThetaParams params);

    int genus() const { return g_; }
    double radius(int order) const;
    const ThetaParams& params() const { return params_; }

    cplx theta_char(const HalfChar& c, const CVec& v) const;
    DerivThetaTensor theta_deriv(const HalfChar& c, int order) const;
    // All derivative tensors of order 0..max_order at v = 0, one lattice pass.
    std::vector<DerivThetaTensor> theta_derivs(const HalfChar& c, int max_order, double radius_scale = 1.0) const;

private:
    template <class F>
    void enumerate(const HalfChar& c, double R, const Eigen::VectorXd& center, F&& visit) const;

    ThetaParams params_;
    int g_;
    Eigen::MatrixXd q_;  // upper-triangular quadratic-form factors
    double lambda_min_;
};

// Lazily filled table of derivative theta constants for one curve,
// keyed by characteristic; holds orders 0..3 (0..4 when heavy).
class ThetaTable {
public:
    ThetaTable(std::shared_ptr<const ThetaEngine> engine, int max_order = 3);

    int genus() const { return engine_->genus(); }
    int max_order() const { return max_order_; }
    const ThetaEngine& engine() const { return *engine_; }
    // Evaluates every characteristic up front (parallel over characteristics).
    void fill_all();

    const DerivThetaTensor& get(const HalfChar& c, int order) const;
    cplx theta(const IndexSet& s) const;
    CVec grad(const IndexSet& s) const;
    CMat hess(const IndexSet& s) const;
    const DerivThetaTensor& tensor(const IndexSet& s, int order) const;

private:
    const std::vector<DerivThetaTensor>& slot(std::uint32_t key) const;

    std::shared_ptr<const ThetaEngine> engine_;
    int max_order_;
    mutable std::vector<std::vector<DerivThetaTensor>> cache_;
    mutable std::vector<std::once_flag> once_;
};

}  // namespace thomae
