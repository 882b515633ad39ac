#include "thomae/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <tbb/parallel_for.h>

#include "thomae/schottky.hpp"

namespace thomae {

using nlohmann::json;

namespace {

using Job = std::function<VerificationRecord(double tol, int sign)>;

const std::vector<std::string> kThomae = {"THOMAE_I", "THOMAE_II", "THOMAE_GEN"};

bool is_thomae(const std::string& f) { return std::find(kThomae.begin(), kThomae.end(), f) != kThomae.end(); }

// Families whose verifier accepts a global sign.
bool sign_retry(const std::string& f) {
    return f == "HESS_K3" || f == "HESS_K4" || f == "D3_K5" || f == "D3_K6";
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<IndexSet> combos(const IndexSet& pool, int k) {
    std::vector<IndexSet> out;
    int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        IndexSet s;
        for (int i : c) s.push_back(pool[i]);
        out.push_back(s);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

IndexSet range(int lo, int hi) {
    IndexSet s;
    for (int i = lo; i <= hi; ++i) s.push_back(i);
    return s;
}

std::vector<std::pair<int, int>> pairs(const IndexSet& pool) {
    std::vector<std::pair<int, int>> out;
    for (size_t a = 0; a < pool.size(); ++a)
        for (size_t b = a + 1; b < pool.size(); ++b) out.emplace_back(pool[a], pool[b]);
    return out;
}

double max_abs(const std::vector<cplx>& v) {
    double m = 0.0;
    for (auto& z : v) m = std::max(m, std::abs(z));
    return m;
}

int eighths(cplx e) {
    int k = static_cast<int>(std::lround(std::arg(e) / (std::numbers::pi / 4)));
    return ((k % 8) + 8) % 8;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

// --- Thomae records -------------------------------------------------------

struct Env {
    const CurveContext& cx;
    const PhaseCalibration& cal;
    int max_order;
    std::uint64_t seed;
    int cap;
};

std::vector<Job> thomae_i_jobs(const Env& e) {
    std::vector<Job> jobs;
    for (auto& p : enumerate_partitions(e.cx.genus(), 0)) {
        jobs.push_back([&e, p](double tol, int) {
            const auto& ent = e.cal.at(partition_char(p));
            cplx lhs = e.cx.th().theta(ent.I0);
            cplx rhs = first_thomae_rhs(e.cx.spec, e.cx.periods, ent.I0);
            VerificationRecord r{"THOMAE_I", {{"I0", ent.I0}, {"char", char_str(ent.ch)}}};
            double mod = std::abs(std::abs(lhs) / std::abs(rhs) - 1.0);
            r.residual = std::max({phase_residual(lhs, rhs, ent.phase), mod, ent.residual});
            r.tolerance = tol;
            r.notes = "phase " + std::to_string(eighths(ent.phase)) + "/8, modulus error " + sci(mod);
            r.judge();
            return r;
        });
    }
    return jobs;
}

std::vector<Job> thomae_ii_jobs(const Env& e) {
    std::vector<Job> jobs;
    for (auto& p : enumerate_partitions(e.cx.genus(), 1)) {
        jobs.push_back([&e, p](double tol, int) {
            CVec lhs = e.cx.th().grad(p.part);
            CVec rhs = second_thomae_rhs_vec(e.cx.spec, e.cx.periods, p.part);
            Eigen::Index n0 = 0;
            lhs.cwiseAbs().maxCoeff(&n0);
            cplx eps = snap_root(lhs[n0] / rhs[n0], 8);
            double global = std::max(lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff());
            double worst = 0.0, mod = 0.0;
            for (Eigen::Index n = 0; n < lhs.size(); ++n) {
                double s = std::max({std::abs(lhs[n]), std::abs(rhs[n]), 1e-10 * global});
                worst = std::max(worst, std::abs(lhs[n] - eps * rhs[n]) / s);
                mod = std::max(mod, std::abs(std::abs(lhs[n]) - std::abs(rhs[n])) / s);
            }
            VerificationRecord r{"THOMAE_II", {{"I1", p.part}, {"char", char_str(partition_char(p))}}};
            r.residual = worst;
            r.tolerance = tol;
            r.notes = "phase " + std::to_string(eighths(eps)) + "/8, modulus error " + sci(mod);
            r.judge();
            return r;
        });
    }
    return jobs;
}

std::vector<Job> thomae_gen_jobs(const Env& e) {
    std::vector<Job> jobs;
    int g = e.cx.genus();
    for (int m = 2; m <= std::min(e.max_order, (g + 1) / 2); ++m) {
        for (auto& p : enumerate_partitions(g, m)) {
            jobs.push_back([&e, p, m, g](double tol, int) {
                const auto& spec = e.cx.spec;
                const auto& pd = e.cx.periods;
                auto Ks = thomae_k_choices(spec, p.part);
                const auto& lhs = e.cx.th().tensor(p.part, m).entries;
                auto rhs = general_thomae_tensor(spec, pd, p.part, Ks.front());
                size_t i0 = 0;
                for (size_t i = 1; i < lhs.size(); ++i)
                    if (std::abs(lhs[i]) > std::abs(lhs[i0])) i0 = i;
                cplx eps = snap_root(lhs[i0] / rhs[i0], 8);
                double scale = std::max(max_abs(lhs), max_abs(rhs));
                double diff = 0.0;
                for (size_t i = 0; i < lhs.size(); ++i) diff = std::max(diff, std::abs(lhs[i] - eps * rhs[i]));

                double kdiff = 0.0;
                for (size_t k = 1; k < Ks.size(); ++k) {
                    auto alt = general_thomae_tensor(spec, pd, p.part, Ks[k]);
                    for (size_t i = 0; i < rhs.size(); ++i) kdiff = std::max(kdiff, std::abs(rhs[i] - alt[i]));
                }
                kdiff /= max_abs(rhs);

                std::vector<int> mi;
                for (size_t rest = i0, k = 0; k < static_cast<size_t>(m); ++k) {
                    mi.push_back(static_cast<int>(rest % g) + 1);
                    rest /= g;
                }
                std::reverse(mi.begin(), mi.end());
                IndexSet I0 = set_union(p.finite(), Ks.front());
                cplx ratio = general_thomae_ratio_rhs(spec, pd, p.part, mi, Ks.front(), I0);
                cplx quot = general_thomae_rhs(spec, pd, p.part, mi, Ks.front()) / first_thomae_rhs(spec, pd, I0);
                double rdiff = std::abs(ratio - quot) / std::max(std::abs(ratio), std::abs(quot));

                VerificationRecord r{"THOMAE_GEN",
                                     {{"Im", p.part}, {"m", m}, {"K", Ks.front()}, {"char", char_str(partition_char(p))}}};
                r.residual = diff / scale;
                r.tolerance = tol;
                r.notes = "phase " + std::to_string(eighths(eps)) + "/8, K-independence " + sci(kdiff) + " over " +
                          std::to_string(Ks.size()) + " choices, ratio form " + sci(rdiff);
                r.judge();
                if (kdiff >= 1e-8 || rdiff >= 1e-10) {
                    r.pass = false;
                    r.notes += "; consistency check failed";
                }
                return r;
            });
        }
    }
    return jobs;
}

// --- relation bindings ----------------------------------------------------

std::vector<Job> relation_jobs(const Env& e, const std::string& f) {
    const auto& cx = e.cx;
    int g = cx.genus();
    IndexSet finite = range(1, 2 * g + 1), all = range(0, 2 * g + 1);
    std::vector<Job> jobs;

    if (f == "EKLM") {
        for (auto& I : combos(finite, g - 1))
            for (auto& J : combos(set_minus(finite, I), g - 1)) {
                IndexSet rest = set_minus(finite, set_union(I, J));
                IndexSet t = rest;
                do {
                    int k = t[0], m = t[1], n = t[2];
                    jobs.push_back([&cx, I, J, k, m, n](double tol, int) { return verify_eklm(cx, I, J, k, m, n, tol); });
                } while (std::next_permutation(t.begin(), t.end()));
            }
    } else if (f == "EJI") {
        for (auto& I0 : combos(finite, g)) {
            IndexSet J0 = set_minus(finite, I0);
            for (int ik : I0)
                for (int il : I0)
                    if (ik != il)
                        for (auto [jn, jm] : pairs(J0))
                            jobs.push_back([&cx, I0, ik, il, jn, jm](double tol, int) {
                                return verify_eji(cx, I0, ik, il, jn, jm, tol);
                            });
        }
    } else if (f == "GRAD2") {
        for (auto& I0 : combos(finite, g)) {
            IndexSet J0 = set_minus(finite, I0);
            for (auto [k1, k2] : pairs(I0))
                for (auto [jm, jn] : pairs(J0))
                    jobs.push_back([&cx, I0, k1, k2, jm, jn](double tol, int) {
                        return verify_grad2(cx, I0, k1, k2, jm, jn, tol);
                    });
        }
    } else if (f == "GRAD3") {
        for (auto& kap : combos(all, 3))
            for (auto& I : combos(set_minus(all, kap), g - 2)) {
                IndexSet J = set_minus(all, set_union(I, kap));
                for (auto [jm, jn] : pairs(J))
                    jobs.push_back([&cx, I, kap, jm, jn](double tol, int) {
                        return verify_grad3(cx, I, kap[0], kap[1], kap[2], jm, jn, tol);
                    });
            }
    } else if (f == "GRAD4" && g >= 3) {
        for (auto& kap : combos(all, 5))
            for (auto& I : combos(set_minus(all, kap), g - 3)) {
                IndexSet J = set_minus(all, set_union(I, kap));
                for (auto [jm, jn] : pairs(J))
                    for (char v : {'a', 'b'})
                        jobs.push_back([&cx, I, kap, jm, jn, v](double tol, int) {
                            return verify_grad4(cx, I, kap, jm, jn, v, tol);
                        });
            }
    } else if (f == "GRADN") {
        for (int r = 4; r <= g; ++r)
            for (auto& B : combos(all, 2 * r - 1))
                for (auto& I : combos(set_minus(all, B), g - r)) {
                    IndexSet J = set_minus(all, set_union(I, B));
                    IndexSet K(B.begin(), B.begin() + r);
                    for (auto [jm, jn] : pairs(J))
                        jobs.push_back([&cx, I, B, K, jm, jn](double tol, int) {
                            return verify_gradN(cx, I, B, K, jm, jn, tol);
                        });
                }
    } else if (f == "RANK_COLLECTION" && g >= 3) {
        auto odd = enumerate_partitions(g, 1);
        std::mt19937_64 R(e.seed ^ fnv1a(f));
        int count = std::min(e.cap, 200);
        std::vector<std::vector<IndexSet>> cols;
        for (int t = 0; t < count; ++t) {
            std::vector<IndexSet> col;
            int n = 2 + static_cast<int>(R() % 6);
            if (t % 2 == 0) {
                for (int i = 0; i < n; ++i) col.push_back(odd[R() % odd.size()].part);
            } else {
                // sets sharing a common part of size g - r
                int r = std::min(g, 2 + static_cast<int>(R() % (g - 1)));
                IndexSet pool = all;
                std::shuffle(pool.begin(), pool.end(), R);
                IndexSet I(pool.begin(), pool.begin() + (g - r)), rest(pool.begin() + (g - r), pool.end());
                for (int i = 0; i < n; ++i) {
                    std::shuffle(rest.begin(), rest.end(), R);
                    col.push_back(set_union(normalized(I), normalized(IndexSet(rest.begin(), rest.begin() + (r - 1)))));
                }
            }
            cols.push_back(col);
        }
        if (g >= 4) {
            IndexSet I4 = range(1, g - 4);
            int k = g - 3;
            cols.push_back({set_union(I4, {k, k + 1}), set_union(I4, {k, k + 1, k + 2}),
                            set_union(I4, {k, k + 1, k + 5}), set_union(I4, {k + 2, k + 3, k + 4})});
        }
        IndexSet I0 = range(1, g);
        std::vector<IndexSet> basis;
        for (int k : I0) basis.push_back(set_minus(I0, {k}));
        cols.push_back(basis);
        for (auto& c : cols) jobs.push_back([&cx, c](double, int) { return verify_collection_rank(cx, c); });
    } else if ((f == "HESS_K3" && g >= 3) || (f == "HESS_K4" && g >= 4) || (f == "D3_K5" && g >= 5) ||
               (f == "D3_K6" && g >= 6)) {
        int ks = f == "HESS_K3" ? 3 : f == "HESS_K4" ? 4 : f == "D3_K5" ? 5 : 6;
        bool third = ks >= 5;
        for (auto& I0 : combos(finite, g)) {
            IndexSet J0 = set_minus(finite, I0);
            for (auto& K : combos(I0, ks))
                for (auto [jm, jn] : pairs(J0))
                    jobs.push_back([&cx, I0, K, jm, jn, third](double tol, int sign) {
                        return third ? third_deriv_repr(cx, I0, K, jm, jn, tol, sign)
                                     : hessian_repr(cx, I0, K, jm, jn, tol, sign);
                    });
        }
    } else if (f == "HESS_EQUIV" && g >= 3) {
        for (int ks : {3, 4}) {
            if (ks > g) continue;
            for (auto& I : combos(finite, g - ks))
                for (auto& U : combos(set_minus(finite, I), ks + 1)) {
                    // K_a drops the last element of U, K_b another one
                    IndexSet Ka(U.begin(), U.end() - 1);
                    IndexSet J = set_minus(finite, set_union(I, U));
                    for (int drop : Ka) {
                        IndexSet Kb = set_minus(U, {drop});
                        for (auto [jm, jn] : pairs(J))
                            jobs.push_back([&cx, I, Ka, Kb, jm, jn](double tol, int) {
                                return hessian_repr_equiv(cx, {set_union(I, Ka), Ka, jm, jn},
                                                          {set_union(I, Kb), Kb, jm, jn}, tol);
                            });
                    }
                }
        }
    } else if (f == "HESS_RANK" && g >= 3) {
        for (auto& p : enumerate_partitions(g, 2))
            jobs.push_back([&cx, p](double, int) { return hessian_rank(cx, p.part); });
    } else if (f == "RJ_DET") {
        for (auto& I0 : combos(finite, g)) {
            std::vector<IndexSet> odd;
            for (int k : I0) odd.push_back(set_minus(I0, {k}));
            jobs.push_back([&cx, I0, odd](double tol, int) {
                auto r = riemann_jacobi_det(cx, odd, rj_even_sets(cx.genus(), I0), tol);
                r.bindings["I0"] = I0;
                return r;
            });
        }
    } else if (f == "CONJ_M") {
        for (int m = 4; m <= e.max_order; ++m)
            for (int ks : {2 * m - 1, 2 * m}) {
                if (ks > g) continue;
                for (auto& I0 : combos(finite, g)) {
                    IndexSet J0 = set_minus(finite, I0);
                    for (auto& K : combos(I0, ks))
                        for (auto [jm, jn] : pairs(J0))
                            jobs.push_back([&cx, I0, K, jm, jn](double tol, int) {
                                return conjecture_m_repr(cx, I0, K, jm, jn, tol);
                            });
                }
            }
    } else if (f == "SCHOTTKY" && g >= 4) {
        for (auto& I0 : combos(finite, g)) {
            IndexSet J0 = set_minus(finite, I0);
            for (auto& P : combos(I0, 4))
                for (auto [jm, jn] : pairs(J0))
                    jobs.push_back([&cx, I0, P, jm, jn](double tol, int) {
                        return verify_schottky_R(cx, I0, P, jm, jn, std::min(tol, 1e-8));
                    });
        }
    }
    return jobs;
}

// Unsampled extras: printed fixtures and the explicit Schottky cases.
std::vector<Job> fixed_jobs(const Env& e, const std::string& f) {
    const auto& cx = e.cx;
    int g = cx.genus();
    std::vector<Job> jobs;
    auto family_of = [](const LiteralRelation& rel) -> std::string {
        if (rel.name.find(".grad2.") != std::string::npos) return "GRAD2";
        if (rel.name.find(".grad3") != std::string::npos) return "GRAD3";
        if (rel.name.find(".hess.empty") != std::string::npos) return "HESS_K4";
        if (rel.name.find(".hess.") != std::string::npos) return "HESS_K3";
        return {};
    };
    for (auto& rel : literal_fixtures()) {
        if (rel.genus != g || family_of(rel) != f) continue;
        jobs.push_back([&cx, &rel, f](double tol, int) {
            auto r = verify_literal(cx, rel, tol);
            r.bindings["fixture"] = r.relation_id;
            r.relation_id = f;
            return r;
        });
    }
    if (f == "SCHOTTKY")
        for (auto& id : schottky_case_ids())
            if (id == "schottky.R" ? (g == 4 || g == 5) : schottky_case(id).genus == g)
                jobs.push_back([&cx, id](double tol, int) { return verify_schottky_case(cx, id, tol); });
    return jobs;
}

std::vector<VerificationRecord> run_jobs(const std::vector<Job>& jobs, double tol, int sign) {
    std::vector<VerificationRecord> out(jobs.size());
    tbb::parallel_for(std::size_t{0}, jobs.size(), [&](std::size_t i) {
        try {
            out[i] = jobs[i](tol, sign);
        } catch (const std::exception& ex) {
            out[i].relation_id = "ERROR";
            out[i].residual = std::numeric_limits<double>::infinity();
            out[i].tolerance = tol;
            out[i].pass = false;
            out[i].notes = ex.what();
        }
    });
    return out;
}

std::size_t count_pass(const std::vector<VerificationRecord>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](auto& r) { return r.pass; }));
}

PeriodData load_periods(const SuiteConfig& cfg, const CurveSpec& spec) {
    namespace fs = std::filesystem;
    PeriodData pd;
    if (!cfg.period_cache.empty() && fs::exists(cfg.period_cache)) {
        std::ifstream in(cfg.period_cache);
        std::stringstream ss;
        ss << in.rdbuf();
        if (periods_from_json(ss.str(), spec, cfg.quad_order, pd)) return pd;
    }
    pd = compute_periods(spec, cfg.quad_order);
    if (!cfg.period_cache.empty()) {
        // write-then-rename keeps readers from seeing a partial file
        fs::path tmp = cfg.period_cache + ".tmp";
        {
            std::ofstream out(tmp);
            out << periods_to_json(spec, pd);
        }
        fs::rename(tmp, cfg.period_cache);
    }
    return pd;
}

}  // namespace

CurveSpec random_curve(int genus, std::uint64_t seed) {
    if (genus < 1) throw CurveError("genus must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    while (true) {
        std::vector<double> v(2 * genus + 1);
        for (auto& x : v) x = u(rng);
        std::sort(v.begin(), v.end());
        bool ok = true;
        for (size_t i = 1; i < v.size(); ++i) ok = ok && v[i] - v[i - 1] >= 0.3;
        if (ok) return validate_curve(genus, v, "random g" + std::to_string(genus) + " seed " + std::to_string(seed));
    }
}

const std::vector<std::string>& suite_families() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v = kThomae;
        for (auto& f : relation_families()) v.push_back(f);
        v.push_back("CONJ_M");
        v.push_back("SCHOTTKY");
        return v;
    }();
    return ids;
}

double default_tolerance(const std::string& f) {
    check_family(f);
    if (f == "THOMAE_I" || f == "THOMAE_II") return 1e-6;
    if (f == "THOMAE_GEN") return 1e-5;
    if (f.rfind("HESS", 0) == 0) return f == "HESS_EQUIV" ? 1e-8 : 1e-6;
    if (f == "D3_K5" || f == "D3_K6" || f == "CONJ_M") return 1e-4;
    if (f == "RJ_DET") return 1e-6;
    if (f == "SCHOTTKY") return 1e-7;
    return 1e-8;
}

void check_family(const std::string& f) {
    const auto& ids = suite_families();
    if (std::find(ids.begin(), ids.end(), f) == ids.end()) throw HarnessError("unknown relation family '" + f + "'");
}

Report run_suite(const SuiteConfig& cfg) {
    for (auto& f : cfg.families) check_family(f);
    for (auto& [f, t] : cfg.tolerances) {
        check_family(f);
        if (!(t > 0.0)) throw HarnessError("tolerance for " + f + " must be positive");
    }
    if (cfg.cap < 1) throw HarnessError("family cap must be >= 1");

    Report rep;
    rep.curve = cfg.curve ? *cfg.curve : random_curve(cfg.genus, cfg.seed);
    int g = rep.curve.genus;

    std::vector<std::string> families;
    for (auto& f : suite_families()) {
        bool wanted = cfg.families.empty() ? (f != "CONJ_M" || cfg.heavy)
                                           : std::find(cfg.families.begin(), cfg.families.end(), f) !=
                                                 cfg.families.end();
        if (wanted) families.push_back(f);
    }
    for (auto& f : families) {
        auto it = cfg.tolerances.find(f);
        rep.tolerances[f] = it != cfg.tolerances.end() ? it->second : default_tolerance(f);
    }

    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    PeriodData pd = load_periods(cfg, rep.curve);
    rep.est_error = pd.est_error;
    ContextOptions opt;
    opt.quad_order = cfg.quad_order;
    opt.theta_tol = cfg.theta_tol;
    opt.max_order = cfg.heavy ? 4 : 3;
    CurveContext cx = make_context(rep.curve, pd, opt);
    rep.timings.push_back({"periods", 0, 0, std::chrono::duration<double>(clock::now() - t0).count()});

    t0 = clock::now();
    PhaseCalibration cal = calibrate_phases(rep.curve, pd, cx.th());
    for (auto& [key, ent] : cal.entries) rep.calibration.push_back({char_str(ent.ch), eighths(ent.phase), ent.residual});
    rep.timings.push_back({"calibration", cal.entries.size(), cal.entries.size(),
                           std::chrono::duration<double>(clock::now() - t0).count()});

    Env env{cx, cal, opt.max_order, cfg.seed, cfg.cap};
    for (auto& f : families) {
        t0 = clock::now();
        double tol = rep.tolerances[f];
        std::vector<Job> jobs = f == "THOMAE_I"    ? thomae_i_jobs(env)
                                : f == "THOMAE_II" ? thomae_ii_jobs(env)
                                : f == "THOMAE_GEN" ? thomae_gen_jobs(env)
                                                    : relation_jobs(env, f);
        std::size_t candidates = jobs.size();
        if (!is_thomae(f) && jobs.size() > static_cast<std::size_t>(cfg.cap)) {
            std::vector<Job> picked;
            std::mt19937_64 rng(cfg.seed ^ fnv1a(f));
            std::sample(jobs.begin(), jobs.end(), std::back_inserter(picked), cfg.cap, rng);
            jobs = std::move(picked);
        }
        for (auto& j : fixed_jobs(env, f)) jobs.push_back(std::move(j));

        auto recs = run_jobs(jobs, tol, 1);
        if (sign_retry(f) && count_pass(recs) < recs.size()) {
            auto flipped = run_jobs(jobs, tol, -1);
            if (count_pass(flipped) > count_pass(recs)) recs = std::move(flipped);
        }
        for (auto& r : recs) {
            if (r.relation_id == "ERROR") r.relation_id = f;
            rep.records.push_back(std::move(r));
        }
        rep.timings.push_back(
            {f, recs.size(), candidates, std::chrono::duration<double>(clock::now() - t0).count()});
    }
    for (auto& r : rep.records) (r.pass ? rep.pass : rep.fail)++;
    return rep;
}

json report_to_json(const Report& r, bool with_seconds) {
    json cal = json::array();
    for (auto& c : r.calibration) cal.push_back({{"char", c.ch}, {"phase", c.phase_eighths}, {"residual", c.residual}});
    json recs = json::array();
    for (auto& v : r.records) recs.push_back(record_to_json(v));
    json timings = json::array();
    for (auto& t : r.timings) {
        json e = {{"family", t.family}, {"records", t.records}, {"candidates", t.candidates}};
        if (with_seconds) e["seconds"] = t.seconds;
        timings.push_back(e);
    }
    return {{"curve", json::parse(curve_to_json(r.curve))},
            {"periods", {{"est_error", r.est_error}}},
            {"calibration", cal},
            {"tolerances", r.tolerances},
            {"records", recs},
            {"summary", {{"pass", r.pass}, {"fail", r.fail}}},
            {"timings", timings}};
}

std::string report_to_text(const Report& r, bool with_seconds) {
    std::ostringstream os;
    os << "curve " << curve_to_json(r.curve) << "\n";
    os << "periods est_error " << sci(r.est_error) << "\n";
    double worst = 0.0;
    for (auto& c : r.calibration) worst = std::max(worst, c.residual);
    os << "calibration " << r.calibration.size() << " characteristics, worst snap residual " << sci(worst) << "\n";
    for (auto& v : r.records)
        os << (v.pass ? "PASS " : "FAIL ") << v.relation_id << " " << sci(v.residual) << " / " << sci(v.tolerance)
           << " " << v.bindings.dump() << (v.notes.empty() ? "" : " # " + v.notes) << "\n";
    for (auto& t : r.timings) {
        os << "family " << t.family << " records " << t.records << " of " << t.candidates;
        if (with_seconds) os << " in " << sci(t.seconds) << " s";
        os << "\n";
    }
    os << "summary pass " << r.pass << " fail " << r.fail << "\n";
    return os.str();
}

}  // namespace thomae
