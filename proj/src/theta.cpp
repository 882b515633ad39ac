#include "thomae/theta.hpp"

#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>
#include <tbb/parallel_for.h>

namespace thomae {

namespace {

constexpr double kPi = std::numbers::pi;

// Sorted multi-indices of orders 0..max_order; each extends a parent by one variable.
struct Monomials {
    std::vector<int> parent, var, order;
    std::vector<std::vector<int>> tuple;
    std::vector<int> offset;  // offset[k] = first monomial of order k

    Monomials(int g, int max_order) {
        parent.push_back(-1);
        var.push_back(-1);
        order.push_back(0);
        tuple.push_back({});
        offset.push_back(0);
        for (int k = 1; k <= max_order; ++k) {
            offset.push_back(static_cast<int>(tuple.size()));
            for (int p = offset[k - 1]; p < offset[k]; ++p) {
                int lo = tuple[p].empty() ? 0 : tuple[p].back();
                for (int v = lo; v < g; ++v) {
                    auto t = tuple[p];
                    t.push_back(v);
                    parent.push_back(p);
                    var.push_back(v);
                    order.push_back(k);
                    tuple.push_back(t);
                }
            }
        }
        offset.push_back(static_cast<int>(tuple.size()));
    }

    int find(std::vector<int> idx) const {
        std::sort(idx.begin(), idx.end());
        int k = static_cast<int>(idx.size());
        for (int i = offset[k]; i < offset[k + 1]; ++i)
            if (tuple[i] == idx) return i;
        throw ThetaError("multi-index not found");
    }
};

}  // namespace

cplx DerivThetaTensor::at(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != order) throw ThetaError("tensor index rank mismatch");
    size_t flat = 0;
    for (int i : idx) flat = flat * g + i;
    return entries.at(flat);
}

cplx DerivThetaTensor::at(std::initializer_list<int> idx) const { return at(std::vector<int>(idx)); }

CVec DerivThetaTensor::vec() const {
    if (order != 1) throw ThetaError("not a gradient");
    return Eigen::Map<const CVec>(entries.data(), g);
}

CMat DerivThetaTensor::mat() const {
    if (order != 2) throw ThetaError("not a Hessian");
    return Eigen::Map<const CMat>(entries.data(), g, g);
}

double DerivThetaTensor::max_abs() const {
    double m = 0.0;
    for (auto& z : entries) m = std::max(m, std::abs(z));
    return m;
}

static double min_eig_pi_imag(const CMat& tau) {
    Eigen::MatrixXd a = kPi * tau.imag();
    a = 0.5 * (a + a.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    return es.eigenvalues().minCoeff();
}

double truncation_radius(const CMat& tau, double tol, int order) {
    int g = static_cast<int>(tau.rows());
    double lam = min_eig_pi_imag(tau);
    if (!(lam > 0)) throw ThetaError("Im tau is not positive definite");
    double rho = std::sqrt(lam);
    double pref = 0.5 * g * std::pow(2.0 / rho, g) * std::pow(2.0 * kPi / std::sqrt(lam), order);
    double a = 0.5 * (g + order);
    double R = rho / 2 + 1.0;
    while (pref * boost::math::tgamma(a, (R - rho / 2) * (R - rho / 2)) > tol) R += 0.05;
    return R;
}

ThetaEngine::ThetaEngine(ThetaParams params) : params_(std::move(params)) {
    g_ = static_cast<int>(params_.tau.rows());
    if (!(params_.tol > 0)) throw ThetaError("theta tolerance must be positive");
    if (!imag_positive_definite(params_.tau)) throw ThetaError("Im tau is not positive definite");
    Eigen::MatrixXd a = kPi * params_.tau.imag();
    a = 0.5 * (a + a.transpose());
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    Eigen::MatrixXd R = llt.matrixU();
    q_ = Eigen::MatrixXd::Zero(g_, g_);
    for (int i = 0; i < g_; ++i) {
        q_(i, i) = R(i, i) * R(i, i);
        for (int j = i + 1; j < g_; ++j) q_(i, j) = R(i, j) / R(i, i);
    }
    lambda_min_ = min_eig_pi_imag(params_.tau);
}

double ThetaEngine::radius(int order) const {
    double R = truncation_radius(params_.tau, params_.tol, order);
    if (R > params_.radius_warn)
        std::cerr << "warning: theta truncation radius " << R << " exceeds " << params_.radius_warn << "\n";
    return R;
}

template <class F>
void ThetaEngine::enumerate(const HalfChar& c, double R, const Eigen::VectorXd& center, F&& visit) const {
    std::vector<double> delta(g_), cc(g_), x(g_);
    for (int k = 0; k < g_; ++k) delta[k] = 0.5 * c.bit_prime(k + 1);
    auto rec = [&](auto&& self, int i, double budget) -> void {
        if (i < 0) {
            visit(cc);
            return;
        }
        double ctr = 0.0;
        for (int j = i + 1; j < g_; ++j) ctr -= q_(i, j) * x[j];
        double half = std::sqrt(std::max(0.0, budget) / q_(i, i));
        long lo = static_cast<long>(std::ceil(ctr - half + center[i] - delta[i]));
        long hi = static_cast<long>(std::floor(ctr + half + center[i] - delta[i]));
        for (long n = lo; n <= hi; ++n) {
            cc[i] = n + delta[i];
            x[i] = cc[i] - center[i];
            double t = q_(i, i) * (x[i] - ctr) * (x[i] - ctr);
            self(self, i - 1, budget - t);
        }
    };
    rec(rec, g_ - 1, R * R);
}

cplx ThetaEngine::theta_char(const HalfChar& c, const CVec& v) const {
    if (v.size() != g_) throw ThetaError("argument dimension mismatch");
    const CMat& tau = params_.tau;
    Eigen::VectorXd center = -tau.imag().ldlt().solve(v.imag());
    double R = radius(0);
    CVec shift(g_);
    for (int k = 0; k < g_; ++k) shift[k] = v[k] + 0.5 * c.bit(k + 1);
    cplx sum = 0.0;
    const cplx I(0, 1);
    enumerate(c, R, center, [&](const std::vector<double>& cc) {
        cplx e = 0.0;
        for (int i = 0; i < g_; ++i) {
            cplx row = 0.0;
            for (int j = 0; j < g_; ++j) row += tau(i, j) * cc[j];
            e += cc[i] * (I * kPi * row + 2.0 * I * kPi * shift[i]);
        }
        sum += std::exp(e);
    });
    return sum;
}

std::vector<DerivThetaTensor> ThetaEngine::theta_derivs(const HalfChar& c, int max_order, double radius_scale) const {
    if (max_order < 0 || max_order > 4) throw ThetaError("derivative order must be in 0..4");
    if (c.g != g_) throw ThetaError("characteristic genus mismatch");
    Monomials mono(g_, max_order);
    size_t nm = mono.tuple.size();
    std::vector<cplx> acc(nm, 0.0);
    std::vector<double> mval(nm), scale(max_order + 1, 0.0);
    const CMat& tau = params_.tau;
    double R = radius(max_order) * radius_scale;
    std::vector<double> eps(g_);
    for (int k = 0; k < g_; ++k) eps[k] = c.bit(k + 1);
    const cplx I(0, 1);

    enumerate(c, R, Eigen::VectorXd::Zero(g_), [&](const std::vector<double>& cc) {
        cplx e = 0.0;
        double cmax = 0.0;
        for (int i = 0; i < g_; ++i) {
            cplx row = 0.0;
            for (int j = 0; j < g_; ++j) row += tau(i, j) * cc[j];
            e += cc[i] * (row + eps[i]);
            cmax = std::max(cmax, std::abs(cc[i]));
        }
        cplx w = std::exp(I * kPi * e);
        double aw = std::abs(w);
        double f = 1.0;
        for (int k = 0; k <= max_order; ++k) {
            scale[k] = std::max(scale[k], aw * f);
            f *= 2.0 * kPi * cmax;
        }
        mval[0] = 1.0;
        acc[0] += w;
        for (size_t m = 1; m < nm; ++m) {
            mval[m] = mval[mono.parent[m]] * cc[mono.var[m]];
            acc[m] += w * mval[m];
        }
    });

    std::vector<DerivThetaTensor> out;
    cplx factor = 1.0;
    for (int k = 0; k <= max_order; ++k) {
        DerivThetaTensor t;
        t.g = g_;
        t.order = k;
        t.ch = c;
        t.scale = scale[k];
        size_t n = 1;
        for (int i = 0; i < k; ++i) n *= g_;
        t.entries.resize(n);
        std::vector<int> idx(k, 0);
        for (size_t flat = 0; flat < n; ++flat) {
            size_t r = flat;
            for (int i = k - 1; i >= 0; --i) {
                idx[i] = static_cast<int>(r % g_);
                r /= g_;
            }
            t.entries[flat] = factor * acc[mono.find(idx)];
        }
        out.push_back(std::move(t));
        factor *= 2.0 * kPi * I;
    }
    return out;
}

DerivThetaTensor ThetaEngine::theta_deriv(const HalfChar& c, int order) const {
    return theta_derivs(c, order).back();
}

ThetaTable::ThetaTable(std::shared_ptr<const ThetaEngine> engine, int max_order)
    : engine_(std::move(engine)),
      max_order_(max_order),
      cache_(std::size_t(1) << (2 * engine_->genus())),
      once_(std::size_t(1) << (2 * engine_->genus())) {}

const std::vector<DerivThetaTensor>& ThetaTable::slot(std::uint32_t key) const {
    std::call_once(once_.at(key), [&] {
        cache_[key] = engine_->theta_derivs(HalfChar::from_key(genus(), key), max_order_);
    });
    return cache_[key];
}

void ThetaTable::fill_all() {
    tbb::parallel_for(std::size_t(0), cache_.size(), [&](std::size_t k) { slot(static_cast<std::uint32_t>(k)); });
}

const DerivThetaTensor& ThetaTable::get(const HalfChar& c, int order) const {
    if (order > max_order_) throw ThetaError("order exceeds table maximum");
    return slot(c.key()).at(order);
}

const DerivThetaTensor& ThetaTable::tensor(const IndexSet& s, int order) const {
    return get(set_char(genus(), s), order);
}

cplx ThetaTable::theta(const IndexSet& s) const { return tensor(s, 0).value(); }
CVec ThetaTable::grad(const IndexSet& s) const { return tensor(s, 1).vec(); }
CMat ThetaTable::hess(const IndexSet& s) const { return tensor(s, 2).mat(); }

}  // namespace thomae
