#pragma once

#include <string>
#include <vector>

#include "thomae/relations.hpp"

namespace thomae {

enum class Syzygy { syzygetic, azygetic };

Syzygy syzygy_test(const HalfChar& a, const HalfChar& b, const HalfChar& c);

// Characteristic of theta[S] for an index set S (Riemann constant included).
HalfChar theta_char(int genus, const IndexSet& s);

// Group generated by sums of branch-point characteristics, each given as the
// index set of the summed eta's. Elements are listed in binary-counting order
// of the generators: 0, P1, P2, P1P2, P3, ...
struct GoepelGroup {
    int genus = 0;
    std::vector<IndexSet> generators;
    std::vector<IndexSet> elements;
    std::vector<HalfChar> chars;
    bool syzygetic = false;  // every pair of elements syzygetic

    int rank() const { return static_cast<int>(generators.size()); }
    // theta index sets of the coset A + (P), same order as `elements`
    std::vector<IndexSet> coset(const IndexSet& A) const;
};

GoepelGroup build_goepel(int genus, const std::vector<IndexSet>& generators);

struct SchottkyTriple {
    std::vector<IndexSet> A;
    std::vector<cplx> r;
    cplx J = 0.0;
    double scale = 0.0;  // max |r_i|^2
};

// r_i = prod over (A_i P) of theta; raised to the 4th power when P has rank 1.
// Throws RelationError naming the first singular or odd coset member.
SchottkyTriple schottky_J(const CurveContext& cx, const GoepelGroup& P, const std::vector<IndexSet>& A);

// The rank-1 relation in 8th/4th powers, det of the 4x4 coefficient matrix,
// its 3x3 minors, and the exact branch-point identity.
VerificationRecord verify_schottky_R(const CurveContext& cx, const IndexSet& I0, const std::vector<int>& p, int jm,
                                     int jn, double tol = 1e-8);

// a1 - a2 + a3 evaluated exactly on the binary expansions of the branch points.
bool exact_a_identity(const CurveSpec& spec, const std::vector<int>& p);

// Root-sum relation sum_i sign_i r_i^(1/d) = 0 over explicit cosets.
struct RootSumCase {
    std::string id;
    int genus = 0;
    GoepelGroup P;
    std::vector<IndexSet> A;      // theta index sets
    std::vector<int> signs;       // printed signs, first is +1
    int root = 2;                 // d in r^(1/d)
    int power = 1;                // r = (coset product)^power
};

const std::vector<std::string>& schottky_case_ids();
RootSumCase schottky_case(const std::string& id);
VerificationRecord verify_root_sum(const CurveContext& cx, const RootSumCase& c, double tol = 1e-7);
VerificationRecord verify_schottky_case(const CurveContext& cx, const std::string& case_id, double tol = 1e-7);

}  // namespace thomae
