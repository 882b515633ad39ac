#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "thomae/characteristics.hpp"
#include "thomae/curve.hpp"

namespace thomae {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

struct PeriodError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GaussLegendre {
    std::vector<double> x, w;
    explicit GaussLegendre(int n);
};

struct PeriodData {
    CMat omega;        // a-periods, column k = a_k
    CMat omega_prime;  // b-periods
    CMat tau;
    int quad_order = 0;
    double est_error = 0.0;
    // Half a-period and gap integrals of du, column k.
    CMat cut;
    CMat gap;
    std::vector<int> b_signs;
};

struct LatticeResidual {
    CVec reduced;
    double norm = 0.0;
};

cplx differential_row(const CurveSpec& spec, int n, double x, int branch_sign = 1);

// Integral of du over (e_a, e_{a+1}) on the fixed sheet, one entry per n.
CVec segment_integral(const CurveSpec& spec, int a, const GaussLegendre& gl);

PeriodData compute_periods(const CurveSpec& spec, int quad_order = 96, double refine_tol = 1e-10);

CVec abel_branch_point(const CurveSpec& spec, const PeriodData& pd, int k);
LatticeResidual halfperiod_residual(const PeriodData& pd, const CVec& v, const HalfChar& c);

double tau_symmetry_error(const CMat& tau);
bool imag_positive_definite(const CMat& tau);

std::string curve_hash(const CurveSpec& spec);
std::string periods_to_json(const CurveSpec& spec, const PeriodData& pd);
// Returns false when the cache does not match spec and quad_order.
bool periods_from_json(const std::string& text, const CurveSpec& spec, int quad_order, PeriodData& out);

}  // namespace thomae
