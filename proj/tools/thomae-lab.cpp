#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "thomae/harness.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of hyperelliptic theta constant relations"};
    app.require_subcommand(1);
    auto* verify = app.add_subcommand("verify", "run the relation suite on one curve");

    std::string curve_path, relations, format = "json", out_path, cache;
    std::vector<std::string> tol_family;
    int genus = 2, quad_order = 96, cap = 500;
    std::uint64_t seed = 1;
    double theta_tol = 1e-12;
    bool heavy = false, seconds = false, verbose = false;

    auto* curve_opt = verify->add_option("--curve", curve_path, "curve spec JSON")->check(CLI::ExistingFile);
    auto* genus_opt = verify->add_option("--genus", genus, "genus of a random curve")->check(CLI::Range(1, 8));
    auto* seed_opt = verify->add_option("--seed", seed, "seed of a random curve");
    curve_opt->excludes(genus_opt)->excludes(seed_opt);
    seed_opt->needs(genus_opt);
    verify->add_option("--relations", relations, "comma-separated family ids");
    verify->add_option("--tol-family", tol_family, "NAME=VAL tolerance override (repeatable)");
    verify->add_option("--quad-order", quad_order, "Gauss-Legendre nodes per segment")->check(CLI::PositiveNumber);
    verify->add_option("--theta-tol", theta_tol, "theta truncation tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--cap", cap, "bindings per family before sampling")->check(CLI::PositiveNumber);
    verify->add_flag("--enable-heavy", heavy, "order-4 tensors and the multiplicity-4 conjecture");
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out_path, "write the report here instead of stdout");
    verify->add_option("--period-cache", cache, "period matrix cache file");
    verify->add_flag("--timings", seconds, "include wall times (breaks byte-identical reports)");
    verify->add_flag("-v,--verbose", verbose, "progress on stderr");

    CLI11_PARSE(app, argc, argv);
    spdlog::set_level(verbose ? spdlog::level::info : spdlog::level::warn);

    try {
        thomae::SuiteConfig cfg;
        if (!curve_path.empty()) {
            std::ifstream in(curve_path);
            std::stringstream ss;
            ss << in.rdbuf();
            cfg.curve = thomae::curve_from_json(ss.str());
        } else if (genus_opt->count() == 0) {
            throw thomae::HarnessError("either --curve or --genus is required");
        }
        cfg.genus = genus;
        cfg.seed = seed;
        cfg.families = split(relations, ',');
        for (auto& kv : tol_family) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw thomae::HarnessError("--tol-family expects NAME=VAL, got " + kv);
            cfg.tolerances[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
        cfg.quad_order = quad_order;
        cfg.theta_tol = theta_tol;
        cfg.cap = cap;
        cfg.heavy = heavy;
        cfg.period_cache = cache;
        // validate names before any computation
        for (auto& f : cfg.families) thomae::check_family(f);
        for (auto& [f, t] : cfg.tolerances) thomae::check_family(f);

        spdlog::info("running suite");
        auto rep = thomae::run_suite(cfg);
        spdlog::info("pass {} fail {}", rep.pass, rep.fail);
        for (auto& t : rep.timings) spdlog::info("{}: {} records, {:.2f} s", t.family, t.records, t.seconds);

        std::string text = format == "json" ? thomae::report_to_json(rep, seconds).dump(2) + "\n"
                                            : thomae::report_to_text(rep, seconds);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
            if (!out) throw thomae::HarnessError("cannot write " + out_path);
        }
        return rep.fail == 0 ? 0 : 1;
    } catch (const std::exception& ex) {
        spdlog::error("{}", ex.what());
        return 2;
    }
}
