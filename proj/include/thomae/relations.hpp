#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thomae/context.hpp"

namespace thomae {

struct RelationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationRecord {
    std::string relation_id;
    nlohmann::json bindings = nlohmann::json::object();
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string notes;

    void judge() { pass = residual < tolerance; }
};

nlohmann::json record_to_json(const VerificationRecord& r);

// Known family ids, in execution order.
const std::vector<std::string>& relation_families();

// Per-component |sum| / max |term|, with a floor of 1e-10 times the global
// term scale so components that vanish identically do not divide by noise.
double combination_residual(const std::vector<CVec>& terms);
double combination_residual(const std::vector<CVec>& terms, const CVec& lhs);

// --- first derivative level ----------------------------------------------

VerificationRecord verify_eklm(const CurveContext& cx, const IndexSet& I, const IndexSet& J, int k, int m, int n,
                               double tol = 1e-8);
VerificationRecord verify_eji(const CurveContext& cx, const IndexSet& I0, int ik, int il, int jn, int jm,
                              double tol = 1e-8);

// Right side of the two-term gradient formula for d theta[I0 \ {k1,k2}].
CVec grad2_rhs(const CurveContext& cx, const IndexSet& I0, int k1, int k2, int jm, int jn);
VerificationRecord verify_grad2(const CurveContext& cx, const IndexSet& I0, int k1, int k2, int jm, int jn,
                                double tol = 1e-8);

// One term of the alternating gradient combination over I, B, J.
struct GradTerm {
    IndexSet M;     // the part of B joined to I
    int sign = 1;
    CVec value;     // theta products times the gradient of I u M
};
std::vector<GradTerm> gradn_terms(const CurveContext& cx, const IndexSet& I, const IndexSet& B, const IndexSet& K,
                                  int jm, int jn);

VerificationRecord verify_gradN(const CurveContext& cx, const IndexSet& I, const IndexSet& B, const IndexSet& K,
                                int jm, int jn, double tol = 1e-8);
VerificationRecord verify_grad3(const CurveContext& cx, const IndexSet& I, int k1, int k2, int k3, int jm, int jn,
                                double tol = 1e-8);
// variant 'a': K = {k1,k2,k3}; variant 'b': K = {k2,k3,k5}.
VerificationRecord verify_grad4(const CurveContext& cx, const IndexSet& I, const std::vector<int>& kappa, int jm,
                                int jn, char variant = 'a', double tol = 1e-8);

struct RankResult {
    int observed = 0;
    int predicted = 0;
    int bound = 0;               // g - |common part|
    bool chain_condition = false;
    std::vector<double> singular_values;
};
int numerical_rank(const std::vector<double>& sv, double rel = 1e-8);
RankResult collection_rank(const CurveContext& cx, const std::vector<IndexSet>& sets);
// Rank of the collection of binary forms prod (x - a_s y), generic points, exact arithmetic.
int generic_form_rank(int genus, const std::vector<IndexSet>& sets);
VerificationRecord verify_collection_rank(const CurveContext& cx, const std::vector<IndexSet>& sets);

// --- higher derivatives ---------------------------------------------------

enum class SignRule { positions, values };

// Entry of the symmetric coefficient tensor for the ordered tuple `pos`
// (positions into sorted K). Zero when a position repeats.
cplx repr_coefficient(const CurveContext& cx, const IndexSet& I0, const IndexSet& K, const std::vector<int>& pos,
                      int jm, int jn, SignRule rule);

// Order-m tensor theta[I0]^{1-m} sum R prod d theta[I0 \ p], dense g^m.
struct ReprValue {
    std::vector<cplx> value;
    double term_scale = 0.0;
};
ReprValue repr_tensor(const CurveContext& cx, const IndexSet& I0, const IndexSet& K, int jm, int jn,
                      SignRule rule);

CMat hessian_repr_value(const CurveContext& cx, const IndexSet& I0, const IndexSet& K, int jm, int jn);
VerificationRecord hessian_repr(const CurveContext& cx, const IndexSet& I0, const IndexSet& K, int jm, int jn,
                                double tol = 1e-6, int global_sign = 1);

struct HessBinding {
    IndexSet I0, K;
    int jm = 0, jn = 0;
};
VerificationRecord hessian_repr_equiv(const CurveContext& cx, const HessBinding& a, const HessBinding& b,
                                      double tol = 1e-8);
VerificationRecord hessian_rank(const CurveContext& cx, const IndexSet& I2);

VerificationRecord third_deriv_repr(const CurveContext& cx, const IndexSet& I0, const IndexSet& K, int jm, int jn,
                                    double tol = 1e-4, int global_sign = 1, SignRule rule = SignRule::positions);
VerificationRecord conjecture_m_repr(const CurveContext& cx, const IndexSet& I0, const IndexSet& K, int jm, int jn,
                                     double tol = 1e-4);

// Even companions of the odd set {I0 \ k : k in I0} in the determinant formula.
std::vector<IndexSet> rj_even_sets(int genus, const IndexSet& I0);
VerificationRecord riemann_jacobi_det(const CurveContext& cx, const std::vector<IndexSet>& odd,
                                      const std::vector<IndexSet>& even, double tol = 1e-6);

// --- literal fixtures -----------------------------------------------------

// sign * prod theta(num) / prod theta(den) * (gradient or symmetrized gradient pair)
struct LiteralTerm {
    int sign = 1;
    std::vector<IndexSet> num, den;
    std::vector<IndexSet> grads;  // one set: vector term; two sets: d_a d_b^t + d_b d_a^t
};
struct LiteralRelation {
    std::string name;
    int genus = 0;
    bool zero_sum = false;  // terms add up to zero; lhs unused
    IndexSet lhs;   // derivative of theta[lhs] of order `order`
    int order = 1;
    std::vector<IndexSet> pre_num, pre_den;
    std::vector<LiteralTerm> terms;
};

// Parses "134" -> {1,3,4}; digits only, "" is the empty set.
IndexSet digits(const std::string& s);
VerificationRecord verify_literal(const CurveContext& cx, const LiteralRelation& rel, double tol);

// Explicit low-genus instances: gradient pairs (g = 2, 3), three-term closings,
// and second derivatives (g = 3, 4).
const std::vector<LiteralRelation>& literal_fixtures();

}  // namespace thomae
