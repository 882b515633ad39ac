#include "thomae/thomae.hpp"

#include <cmath>
#include <numbers>

namespace thomae {

namespace {

constexpr double kPi = std::numbers::pi;

cplx det_prefactor(const PeriodData& pd) {
    int g = static_cast<int>(pd.omega.rows());
    return std::sqrt(pd.omega.determinant() / std::pow(kPi, g));
}

cplx quarter(double x) { return std::pow(cplx(x, 0.0), 0.25); }

// Row u[n] = sum_j (-1)^{j-1} s_{j-1}(S) omega_{j,n}.
CVec alternating_row(const CurveSpec& spec, const PeriodData& pd, const IndexSet& S) {
    int g = spec.genus;
    auto s = elementary_symmetric_all(spec, finite_part(S));
    CVec coef = CVec::Zero(g);
    for (int j = 1; j <= g; ++j) {
        double sj = (j - 1) < static_cast<int>(s.size()) ? s[j - 1] : 0.0;
        coef[j - 1] = (j % 2 == 1 ? 1.0 : -1.0) * sj;
    }
    return pd.omega.transpose() * coef;
}

Partition checked(const CurveSpec& spec, const IndexSet& s, int m) {
    Partition p = Partition::of(spec.genus, s);
    if (multiplicity(p) != m)
        throw ThomaeError("wrong multiplicity for " + set_str(s) + ": expected " + std::to_string(m));
    return p;
}

// Sum over ordered distinct tuples of K of the product formula, all multi-indices.
std::vector<cplx> thomae_sum(const CurveSpec& spec, const PeriodData& pd, const IndexSet& Im, const IndexSet& K,
                             int m) {
    int g = spec.genus;
    std::vector<CVec> u;
    for (int p : K) u.push_back(alternating_row(spec, pd, set_union(finite_part(Im), set_minus(K, {p}))));
    size_t n = 1;
    for (int i = 0; i < m; ++i) n *= g;
    std::vector<cplx> out(n, 0.0);
    int kk = static_cast<int>(K.size());
    std::vector<int> pick(m);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == m) {
            std::vector<double> denom(m, 1.0);
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < kk; ++k) {
                    bool used = false;
                    for (int t = 0; t < m; ++t) used |= pick[t] == k;
                    if (!used) denom[i] *= spec.at(K[pick[i]]) - spec.at(K[k]);
                }
            std::vector<int> idx(m, 0);
            for (size_t flat = 0; flat < n; ++flat) {
                size_t r = flat;
                for (int i = m - 1; i >= 0; --i) {
                    idx[i] = static_cast<int>(r % g);
                    r /= g;
                }
                cplx prod = 1.0;
                for (int i = 0; i < m; ++i) prod *= u[pick[i]][idx[i]] / denom[i];
                out[flat] += prod;
            }
            return;
        }
        for (int k = 0; k < kk; ++k) {
            bool used = false;
            for (int t = 0; t < depth; ++t) used |= pick[t] == k;
            if (used) continue;
            pick[depth] = k;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return out;
}

size_t flat_index(int g, const std::vector<int>& idx) {
    size_t f = 0;
    for (int i : idx) {
        if (i < 0 || i >= g) throw ThomaeError("derivative index out of range");
        f = f * g + i;
    }
    return f;
}

}  // namespace

cplx snap_root(cplx z, int order) {
    double step = 2 * kPi / order;
    double k = std::round(std::arg(z) / step);
    return std::polar(1.0, k * step);
}

double phase_residual(cplx lhs, cplx rhs, cplx e) {
    double den = std::max(std::abs(lhs), std::abs(rhs));
    return den == 0.0 ? 0.0 : std::abs(lhs - e * rhs) / den;
}

cplx first_thomae_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& I0) {
    Partition p = checked(spec, I0, 0);
    IndexSet I = p.finite();
    IndexSet J = finite_complement(spec.genus, I);
    return det_prefactor(pd) * quarter(vandermonde(spec, I)) * quarter(vandermonde(spec, J));
}

CVec second_thomae_rhs_vec(const CurveSpec& spec, const PeriodData& pd, const IndexSet& I1) {
    Partition p = checked(spec, I1, 1);
    IndexSet I = p.finite();
    IndexSet J = finite_complement(spec.genus, I);
    if (!contains(p.part, 0))
        return det_prefactor(pd) * quarter(vandermonde(spec, I)) * quarter(vandermonde(spec, J)) *
               alternating_row(spec, pd, I);
    // Infinity on the small side: the general formula with |K| = 2 covers it.
    IndexSet K(J.begin(), J.begin() + 2);
    auto t = general_thomae_tensor(spec, pd, I, K);
    return Eigen::Map<CVec>(t.data(), spec.genus);
}

cplx second_thomae_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& I1, int n) {
    if (n < 1 || n > spec.genus) throw ThomaeError("derivative index out of range");
    return second_thomae_rhs_vec(spec, pd, I1)[n - 1];
}

std::vector<cplx> general_thomae_tensor(const CurveSpec& spec, const PeriodData& pd, const IndexSet& Im,
                                        const IndexSet& K) {
    Partition p = Partition::of(spec.genus, Im);
    int m = multiplicity(p);
    if (m < 1) throw ThomaeError("general Thomae needs multiplicity >= 1");
    IndexSet I = p.finite();
    IndexSet J = finite_complement(spec.genus, I);
    IndexSet Kn = normalized(K);
    int ks = static_cast<int>(Kn.size());
    // |K| = 2m-1 when infinity lies in J_m, 2m when it lies in I_m.
    if (ks != spec.genus - static_cast<int>(I.size()))
        throw ThomaeError("|K| must be " + std::to_string(spec.genus - static_cast<int>(I.size())) + " for " +
                          set_str(p.part));
    if (set_minus(Kn, J).size() != 0) throw ThomaeError("K must lie in the finite part of J_m");
    auto t = thomae_sum(spec, pd, I, Kn, m);
    cplx pre = det_prefactor(pd) * quarter(vandermonde(spec, I)) * quarter(vandermonde(spec, J));
    for (auto& z : t) z *= pre;
    return t;
}

cplx general_thomae_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& Im,
                        const std::vector<int>& multi_index, const IndexSet& K) {
    auto t = general_thomae_tensor(spec, pd, Im, K);
    int m = multiplicity(Partition::of(spec.genus, Im));
    if (static_cast<int>(multi_index.size()) != m) throw ThomaeError("multi-index length must equal multiplicity");
    std::vector<int> idx;
    for (int n : multi_index) idx.push_back(n - 1);
    return t.at(flat_index(spec.genus, idx));
}

cplx general_thomae_ratio_rhs(const CurveSpec& spec, const PeriodData& pd, const IndexSet& Im,
                              const std::vector<int>& multi_index, const IndexSet& K, const IndexSet& I0) {
    IndexSet I0f = checked(spec, I0, 0).finite();
    IndexSet Kn = normalized(K), Imf = finite_part(normalized(Im));
    if (set_minus(I0f, Kn) != Imf || set_minus(Kn, I0f).size() != 0) throw ThomaeError("I_m must equal I0 \\ K");
    int m = multiplicity(Partition::of(spec.genus, Im));
    if (static_cast<int>(multi_index.size()) != m) throw ThomaeError("multi-index length must equal multiplicity");
    IndexSet J0 = finite_complement(spec.genus, I0f);
    cplx pre = 1.0;
    for (int k : Kn) {
        double num = 1.0, den = 1.0;
        for (int j : J0) num *= spec.at(k) - spec.at(j);
        for (int i : Imf) den *= spec.at(k) - spec.at(i);
        pre *= quarter(std::abs(num)) / quarter(std::abs(den));
    }
    auto t = thomae_sum(spec, pd, Imf, Kn, m);
    std::vector<int> idx;
    for (int n : multi_index) idx.push_back(n - 1);
    return pre * t.at(flat_index(spec.genus, idx));
}

std::vector<IndexSet> thomae_k_choices(const CurveSpec& spec, const IndexSet& Im) {
    IndexSet I = Partition::of(spec.genus, Im).finite();
    IndexSet J = finite_complement(spec.genus, I);
    int k_size = spec.genus - static_cast<int>(I.size());
    std::vector<IndexSet> out;
    int n = static_cast<int>(J.size());
    if (k_size > n) return out;
    std::vector<int> c(k_size);
    for (int i = 0; i < k_size; ++i) c[i] = i;
    while (true) {
        IndexSet K;
        for (int i : c) K.push_back(J[i]);
        out.push_back(K);
        int i = k_size - 1;
        while (i >= 0 && c[i] == n - k_size + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k_size; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

const PhaseEntry& PhaseCalibration::at(const HalfChar& c) const {
    auto it = entries.find(c.key());
    if (it == entries.end()) throw ThomaeError("no calibration for " + char_str(c));
    return it->second;
}

PhaseCalibration calibrate_phases(const CurveSpec& spec, const PeriodData& pd, const ThetaTable& table,
                                  double fail_above) {
    PhaseCalibration cal;
    for (auto& p : enumerate_partitions(spec.genus, 0)) {
        HalfChar c = partition_char(p);
        cplx lhs = table.get(c, 0).value();
        cplx rhs = first_thomae_rhs(spec, pd, p.part);
        cplx raw = lhs / rhs;
        PhaseEntry e{c, p.finite(), snap_root(raw, 8), 0.0, 0.0};
        e.residual = std::abs(raw - e.phase);
        e.modulus_error = std::abs(std::abs(lhs) / std::abs(rhs) - 1.0);
        cal.max_residual = std::max(cal.max_residual, e.residual);
        if (e.residual > fail_above)
            throw ThomaeError("phase calibration failed for " + char_str(c) + " residual " + std::to_string(e.residual));
        cal.entries[c.key()] = e;
    }
    return cal;
}

}  // namespace thomae
