#include "thomae/schottky.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace thomae {

using nlohmann::json;

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

int parity_bit(const HalfChar& c) { return is_odd(c) ? 1 : 0; }

std::string unit_str(cplx u) {
    if (std::abs(u.imag()) < 0.5) return u.real() > 0 ? "+1" : "-1";
    return u.imag() > 0 ? "+i" : "-i";
}

}  // namespace

Syzygy syzygy_test(const HalfChar& a, const HalfChar& b, const HalfChar& c) {
    int s = parity_bit(a) + parity_bit(b) + parity_bit(c) + parity_bit(char_sum(char_sum(a, b), c));
    return s % 2 ? Syzygy::azygetic : Syzygy::syzygetic;
}

HalfChar theta_char(int genus, const IndexSet& s) { return partition_char(Partition::of(genus, s)); }

std::vector<IndexSet> GoepelGroup::coset(const IndexSet& A) const {
    std::vector<IndexSet> out;
    for (auto& e : elements) out.push_back(set_xor(finite_part(A), e));
    return out;
}

GoepelGroup build_goepel(int genus, const std::vector<IndexSet>& generators) {
    GoepelGroup P;
    P.genus = genus;
    for (auto& g : generators) P.generators.push_back(finite_part(normalized(g)));
    size_t n = std::size_t{1} << P.generators.size();
    for (size_t b = 0; b < n; ++b) {
        IndexSet e;
        for (size_t i = 0; i < P.generators.size(); ++i)
            if (b >> i & 1) e = set_xor(e, P.generators[i]);
        P.elements.push_back(e);
        HalfChar c{genus, 0, 0};
        for (int i : e) c = char_sum(c, branch_char(genus, i));
        P.chars.push_back(c);
    }
    for (size_t i = 1; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
            if (P.chars[i] == P.chars[j]) throw RelationError("dependent generators");
    P.syzygetic = true;
    HalfChar zero{genus, 0, 0};
    for (size_t i = 0; i < n && P.syzygetic; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (syzygy_test(P.chars[i], P.chars[j], zero) == Syzygy::azygetic) {
                P.syzygetic = false;
                break;
            }
    return P;
}

namespace {

cplx coset_product(const CurveContext& cx, const GoepelGroup& P, const IndexSet& A) {
    cplx prod = 1.0;
    for (auto& s : P.coset(A)) {
        Partition part = Partition::of(cx.genus(), s);
        if (multiplicity(part) != 0 || is_odd(partition_char(part)))
            throw RelationError("coset member " + set_str(s) + " of " + set_str(A) + " is not even nonsingular");
        prod *= cx.th().theta(part.part);
    }
    return prod;
}

}  // namespace

SchottkyTriple schottky_J(const CurveContext& cx, const GoepelGroup& P, const std::vector<IndexSet>& A) {
    if (A.size() != 3) throw RelationError("three coset representatives expected");
    SchottkyTriple t;
    t.A = A;
    for (auto& a : A) {
        cplx r = coset_product(cx, P, a);
        if (P.rank() == 1) r = std::pow(r, 4);
        t.r.push_back(r);
        t.scale = std::max(t.scale, std::norm(r));
    }
    auto& r = t.r;
    t.J = r[0] * r[0] + r[1] * r[1] + r[2] * r[2] - 2.0 * (r[0] * r[1] + r[0] * r[2] + r[1] * r[2]);
    return t;
}

bool exact_a_identity(const CurveSpec& spec, const std::vector<int>& p) {
    using boost::multiprecision::cpp_rational;
    std::vector<int> q = p;
    std::sort(q.begin(), q.end());
    auto e = [&](int i) { return cpp_rational(spec.at(q[i])); };
    cpp_rational a1 = (e(1) - e(0)) * (e(3) - e(2));
    cpp_rational a2 = (e(2) - e(0)) * (e(3) - e(1));
    cpp_rational a3 = (e(3) - e(0)) * (e(2) - e(1));
    return a1 - a2 + a3 == 0;
}

VerificationRecord verify_schottky_R(const CurveContext& cx, const IndexSet& I0, const std::vector<int>& p, int jm,
                                     int jn, double tol) {
    int g = cx.genus();
    if (g < 4) throw RelationError("binding violation: g >= 4");
    IndexSet K = normalized(IndexSet(p.begin(), p.end()));
    if (K.size() != 4 || set_minus(K, I0).size() != 0) throw RelationError("binding violation: four p's inside I0");
    IndexSet J0 = finite_complement(g, I0);
    if (!contains(J0, jm) || !contains(J0, jn) || jm == jn || static_cast<int>(I0.size()) != g)
        throw RelationError("binding violation: j_m != j_n in J0");
    const auto& T = cx.th();
    auto th = [&](int a, int b) { return T.theta(replace(I0, {K[a], K[b]}, {jm, jn})); };
    cplx t12 = std::pow(th(0, 1) * th(2, 3), 4);
    cplx t13 = std::pow(th(0, 2) * th(1, 3), 4);
    cplx t14 = std::pow(th(0, 3) * th(1, 2), 4);
    cplx comb = t12 * t12 + t13 * t13 + t14 * t14 - 2.0 * (t12 * t13 + t12 * t14 + t13 * t14);
    double scale = std::max({std::norm(t12), std::norm(t13), std::norm(t14)});
    double res_r = std::abs(comb) / scale;

    CMat R = CMat::Zero(4, 4);
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            if (k != l) R(k, l) = repr_coefficient(cx, I0, K, {k, l}, jm, jn, SignRule::positions);
    double dscale = std::max({std::norm(R(0, 1) * R(2, 3)), std::norm(R(0, 2) * R(1, 3)), std::norm(R(0, 3) * R(1, 2))});
    double res_det = std::abs(R.determinant()) / dscale;
    Eigen::JacobiSVD<CMat> svd(R);
    double s3 = svd.singularValues()[2] / svd.singularValues()[0];
    bool exact = exact_a_identity(cx.spec, p);

    VerificationRecord r{"schottky.R", {{"I0", I0}, {"p", K}, {"j_m", jm}, {"j_n", jn}}};
    r.residual = std::max({res_r, res_det, res_det < 1e-10 ? 0.0 : 1.0, s3 > 1e-6 ? 0.0 : 1.0, exact ? 0.0 : 1.0});
    r.tolerance = tol;
    r.notes = "relation " + fmt(res_r) + ", det " + fmt(res_det) + ", sigma3/sigma1 " + fmt(s3) +
              ", a1-a2+a3 " + (exact ? "exactly 0" : "NONZERO");
    r.judge();
    return r;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& schottky_case_ids() {
    static const std::vector<std::string> ids = {"schottky.R",    "schottky.F69",   "schottky.F69G3",
                                                 "schottky.F70",  "schottky.G5r1",  "schottky.G5r3",
                                                 "schottky.G5mixed", "schottky.G5rank4"};
    return ids;
}

RootSumCase schottky_case(const std::string& id) {
    RootSumCase c;
    c.id = id;
    const IndexSet I0{6, 8, 9, 10, 11};
    const IndexSet K{6, 9, 10, 11};
    if (id == "schottky.F69") {
        c.genus = 4;
        c.P = build_goepel(4, {{1, 2}, {1, 2, 3}, {1, 2, 3, 4, 5}});
        c.A = {{2, 4, 6, 8}, {2, 4, 6, 9}, {2, 4, 6, 7}};
        c.signs = {1, -1, -1};
    } else if (id == "schottky.F69G3") {
        c.genus = 3;
        c.P = build_goepel(3, {{2, 3}, {4, 5, 6, 7}});
        c.A = {{2, 4, 6}, {2, 4, 7}, {2, 4, 5}};
        c.signs = {1, -1, -1};
        c.root = 1;
    } else if (id == "schottky.F70") {
        c.genus = 5;
        c.P = build_goepel(5, {{1, 2}, {1, 2, 3}, {1, 2, 3, 4, 5}});
        c.A = {{2, 4, 6, 8, 10}, {2, 4, 6, 8, 11}, {2, 4, 6, 8, 9}, {2, 4, 6, 7, 8}};
        c.signs = {1, -1, -1, -1};
    } else if (id == "schottky.G5r1" || id == "schottky.G5r3") {
        c.genus = 5;
        c.P = id == "schottky.G5r1" ? build_goepel(5, {K}) : build_goepel(5, {K, {1, 2}, {4, 5}});
        c.A = {replace(I0, {9, 11}, {2, 4}), replace(I0, {9, 10}, {2, 4}), replace(I0, {10, 11}, {2, 4})};
        c.signs = {1, -1, -1};
        if (id == "schottky.G5r1") c.power = 4;
    } else if (id == "schottky.G5mixed") {
        c.genus = 5;
        c.P = build_goepel(5, {{1, 3}, {4, 5}, K});
        c.A = {replace(I0, {9, 11}, {3, 5}), replace(I0, {9, 10}, {3, 5}), replace(I0, {10, 11}, {3, 5})};
        c.signs = {1, -1, -1};
    } else if (id == "schottky.G5rank4") {
        c.genus = 5;
        c.P = build_goepel(5, {{1, 2}, {3, 4}, {8, 9, 10, 11}, {6, 7}});
        c.A = {{2, 4, 6, 8, 10}, {2, 4, 6, 8, 11}, {2, 4, 6, 8, 9}};
        c.signs = {1, -1, -1};
        c.root = 4;
    } else {
        throw RelationError("unknown Schottky case '" + id + "'");
    }
    return c;
}

VerificationRecord verify_root_sum(const CurveContext& cx, const RootSumCase& c, double tol) {
    if (cx.genus() != c.genus)
        throw RelationError(c.id + " needs genus " + std::to_string(c.genus) + ", curve has " +
                            std::to_string(cx.genus()));
    // r^(1/root) with r = prod^power: integral exponents are taken literally,
    // otherwise the principal root times a unit chosen below.
    int d = c.root / std::gcd(c.root, c.power);
    double ex = static_cast<double>(c.power) / c.root;
    std::vector<cplx> rho;
    double scale = 0.0;
    for (auto& a : c.A) {
        cplx prod = coset_product(cx, c.P, a);
        cplx v = d == 1 ? std::pow(prod, c.power / c.root) : std::pow(prod, ex);
        rho.push_back(v);
        scale = std::max(scale, std::abs(v));
    }
    std::vector<cplx> units(d);
    for (int k = 0; k < d; ++k) units[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / d);

    size_t n = rho.size();
    std::vector<int> pick(n, 0), best_pick(n, 0);
    double best = INFINITY;
    double literal = 0.0;
    size_t combos = 1;
    for (size_t i = 1; i < n; ++i) combos *= d;
    for (size_t code = 0; code < combos; ++code) {
        size_t x = code;
        cplx sum = rho[0];
        for (size_t i = 1; i < n; ++i) {
            pick[i] = static_cast<int>(x % d);
            x /= d;
            sum += double(c.signs[i]) * units[pick[i]] * rho[i];
        }
        double res = std::abs(sum) / scale;
        if (code == 0) literal = res;
        if (res < best) {
            best = res;
            best_pick = pick;
        }
    }
    json P = json::array();
    for (auto& g : c.P.generators) P.push_back(g);
    VerificationRecord r{c.id, {{"P", P}, {"A", c.A}, {"signs", c.signs}}};
    r.residual = best;
    r.tolerance = tol;
    std::string chosen;
    for (size_t i = 1; i < n; ++i) chosen += (i > 1 ? "," : "") + unit_str(units[best_pick[i]]);
    r.notes = "rank " + std::to_string(c.P.rank()) + (c.P.syzygetic ? " syzygetic" : " not syzygetic") +
              (d == 1 ? "; roots literal" : "; root units " + chosen + ", principal roots give " + fmt(literal));
    r.judge();
    return r;
}

VerificationRecord verify_schottky_case(const CurveContext& cx, const std::string& case_id, double tol) {
    if (case_id == "schottky.R") {
        if (cx.genus() == 4) return verify_schottky_R(cx, {6, 7, 8, 9}, {6, 7, 8, 9}, 2, 4, tol);
        if (cx.genus() == 5) return verify_schottky_R(cx, {6, 8, 9, 10, 11}, {6, 9, 10, 11}, 2, 4, tol);
        throw RelationError("schottky.R needs genus 4 or 5");
    }
    return verify_root_sum(cx, schottky_case(case_id), tol);
}

}  // namespace thomae
