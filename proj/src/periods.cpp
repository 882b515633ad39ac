#include "thomae/periods.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace thomae {

GaussLegendre::GaussLegendre(int n) : x(n), w(n) {
    if (n < 1) throw PeriodError("quadrature order must be positive");
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

static int points_above(const CurveSpec& spec, double x) {
    int p = 0;
    for (int j = 1; j <= spec.num_finite(); ++j)
        if (spec.e[j] > x) ++p;
    return p;
}

// i^{-p}
static cplx ipow_inv(int p) {
    switch (((p % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, -1};
        case 2: return {-1, 0};
        default: return {0, 1};
    }
}

cplx differential_row(const CurveSpec& spec, int n, double x, int branch_sign) {
    int g = spec.genus;
    if (n < 1 || n > g) throw PeriodError("differential index out of range");
    double f = 1.0;
    for (int j = 1; j <= spec.num_finite(); ++j) {
        if (x == spec.e[j]) throw PeriodError("integrand singular at branch point");
        f *= x - spec.e[j];
    }
    int p = points_above(spec, x);
    // y = i^p sqrt|f|
    cplx y = std::sqrt(std::abs(f)) / ipow_inv(p) * double(branch_sign);
    return std::pow(x, g - n) / (-2.0 * y);
}

CVec segment_integral(const CurveSpec& spec, int a, const GaussLegendre& gl) {
    int g = spec.genus;
    double lo = spec.e[a], hi = spec.e[a + 1];
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(g);
    const double h = std::numbers::pi / 2;
    for (size_t q = 0; q < gl.x.size(); ++q) {
        double th = h * gl.x[q];
        double x = mid + half * std::sin(th);
        double rest = 1.0;
        for (int j = 1; j <= spec.num_finite(); ++j)
            if (j != a && j != a + 1) rest *= x - spec.e[j];
        double base = gl.w[q] * h / (-2.0 * std::sqrt(std::abs(rest)));
        double xp = 1.0;
        for (int n = g; n >= 1; --n) {
            acc[n - 1] += base * xp;
            xp *= x;
        }
    }
    int p = spec.num_finite() - a;
    return acc.cast<cplx>() * ipow_inv(p);
}

double tau_symmetry_error(const CMat& tau) {
    return (tau - tau.transpose()).cwiseAbs().maxCoeff() / std::max(1e-300, tau.cwiseAbs().maxCoeff());
}

bool imag_positive_definite(const CMat& tau) {
    Eigen::MatrixXd im = tau.imag();
    im = 0.5 * (im + im.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(im);
    return es.eigenvalues().minCoeff() > 0.0;
}

namespace {

struct Raw {
    CMat cut, gap;
};

Raw raw_segments(const CurveSpec& spec, int order) {
    int g = spec.genus;
    GaussLegendre gl(order);
    Raw r{CMat(g, g), CMat(g, g)};
    for (int k = 1; k <= g; ++k) {
        r.cut.col(k - 1) = segment_integral(spec, 2 * k - 1, gl);
        r.gap.col(k - 1) = segment_integral(spec, 2 * k, gl);
    }
    return r;
}

void assemble(const Raw& r, const std::vector<int>& sgn, CMat& om, CMat& omp) {
    int g = static_cast<int>(r.cut.cols());
    om = 2.0 * r.cut;
    omp = CMat::Zero(g, g);
    for (int k = 0; k < g; ++k) {
        for (int l = k; l < g; ++l) omp.col(k) += r.gap.col(l);
        omp.col(k) *= 2.0 * sgn[k];
    }
}

}  // namespace

PeriodData compute_periods(const CurveSpec& spec, int quad_order, double refine_tol) {
    int g = spec.genus;
    Raw r = raw_segments(spec, quad_order);
    Raw r2 = raw_segments(spec, 2 * quad_order);

    PeriodData pd;
    pd.quad_order = quad_order;
    pd.cut = r.cut;
    pd.gap = r.gap;
    double scale = std::max(r2.cut.cwiseAbs().maxCoeff(), r2.gap.cwiseAbs().maxCoeff());
    pd.est_error = std::max((r.cut - r2.cut).cwiseAbs().maxCoeff(), (r.gap - r2.gap).cwiseAbs().maxCoeff()) / scale;

    // Orientation of each b-cycle: the unique choice giving a Riemann matrix.
    std::string last_bad;
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
        std::vector<int> sgn(g);
        for (int k = 0; k < g; ++k) sgn[k] = (mask >> k) & 1u ? -1 : 1;
        CMat om, omp;
        assemble(r, sgn, om, omp);
        CMat tau = om.partialPivLu().solve(omp);
        if (tau_symmetry_error(tau) > 1e-9 || !imag_positive_definite(tau)) {
            std::ostringstream os;
            os << tau;
            last_bad = os.str();
            continue;
        }
        pd.omega = om;
        pd.omega_prime = omp;
        pd.tau = tau;
        pd.b_signs = sgn;
        for (int k : {1, 2 * g + 1}) {
            auto res = halfperiod_residual(pd, abel_branch_point(spec, pd, k), branch_char(g, k));
            if (res.norm > 1e-8) throw PeriodError("Abel cross-check failed at branch point " + std::to_string(k));
        }
        if (pd.est_error > refine_tol) {
            // Keep the refined values when the base order is not converged.
            pd.cut = r2.cut;
            pd.gap = r2.gap;
            assemble(r2, sgn, pd.omega, pd.omega_prime);
            pd.tau = pd.omega.partialPivLu().solve(pd.omega_prime);
            pd.quad_order = 2 * quad_order;
        }
        return pd;
    }
    throw PeriodError("homology sign bookkeeping failure; tau =\n" + last_bad);
}

CVec abel_branch_point(const CurveSpec& spec, const PeriodData& pd, int k) {
    int g = spec.genus;
    if (k < 1 || k > 2 * g + 1) throw PeriodError("branch index out of range");
    auto lu = pd.omega.partialPivLu();
    CMat vcut = lu.solve(pd.cut), vgap = lu.solve(pd.gap);
    CVec a = -vcut.rowwise().sum();
    if (k == 2 * g + 1) return a;
    for (int j = g; j >= 1; --j) {
        a += vgap.col(j - 1);
        if (k == 2 * j) return a;
        a -= vcut.col(j - 1);
        if (k == 2 * j - 1) return a;
    }
    return a;
}

LatticeResidual halfperiod_residual(const PeriodData& pd, const CVec& v, const HalfChar& c) {
    int g = static_cast<int>(v.size());
    CVec target(g);
    Eigen::VectorXd ep(g), e(g);
    for (int k = 1; k <= g; ++k) {
        e[k - 1] = c.bit(k);
        ep[k - 1] = c.bit_prime(k);
    }
    CVec w = v - 0.5 * e.cast<cplx>() - 0.5 * pd.tau * ep.cast<cplx>();
    Eigen::MatrixXd im = pd.tau.imag(), re = pd.tau.real();
    Eigen::VectorXd b = im.ldlt().solve(w.imag());
    Eigen::VectorXd a = w.real() - re * b;
    for (int k = 0; k < g; ++k) {
        a[k] -= std::round(a[k]);
        b[k] -= std::round(b[k]);
    }
    LatticeResidual r;
    r.reduced = a.cast<cplx>() + pd.tau * b.cast<cplx>();
    r.norm = r.reduced.norm();
    return r;
}

std::string curve_hash(const CurveSpec& spec) {
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : curve_to_json(spec)) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

static nlohmann::json mat_json(const CMat& m) {
    nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<double> r, s;
        for (int j = 0; j < m.cols(); ++j) {
            r.push_back(m(i, j).real());
            s.push_back(m(i, j).imag());
        }
        re.push_back(r);
        im.push_back(s);
    }
    return {{"re", re}, {"im", im}};
}

static CMat mat_from(const nlohmann::json& j) {
    auto re = j.at("re").get<std::vector<std::vector<double>>>();
    auto im = j.at("im").get<std::vector<std::vector<double>>>();
    int n = static_cast<int>(re.size());
    CMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i, k) = {re[i].at(k), im[i].at(k)};
    return m;
}

std::string periods_to_json(const CurveSpec& spec, const PeriodData& pd) {
    nlohmann::json j;
    j["hash"] = curve_hash(spec);
    j["quad_order"] = pd.quad_order;
    j["omega"] = mat_json(pd.omega);
    j["omega_prime"] = mat_json(pd.omega_prime);
    j["est_error"] = pd.est_error;
    j["cut"] = mat_json(pd.cut);
    j["gap"] = mat_json(pd.gap);
    j["b_signs"] = pd.b_signs;
    return j.dump(1);
}

bool periods_from_json(const std::string& text, const CurveSpec& spec, int quad_order, PeriodData& out) {
    auto j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || j.value("hash", "") != curve_hash(spec)) return false;
    if (j.value("quad_order", 0) < quad_order) return false;
    PeriodData pd;
    pd.quad_order = j["quad_order"];
    pd.omega = mat_from(j.at("omega"));
    pd.omega_prime = mat_from(j.at("omega_prime"));
    pd.est_error = j.at("est_error");
    pd.cut = mat_from(j.at("cut"));
    pd.gap = mat_from(j.at("gap"));
    pd.b_signs = j.at("b_signs").get<std::vector<int>>();
    pd.tau = pd.omega.partialPivLu().solve(pd.omega_prime);
    if (tau_symmetry_error(pd.tau) > 1e-9 || !imag_positive_definite(pd.tau)) return false;
    out = std::move(pd);
    return true;
}

}  // namespace thomae
