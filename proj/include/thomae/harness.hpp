#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thomae/relations.hpp"

namespace thomae {

struct HarnessError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteConfig {
    std::optional<CurveSpec> curve;  // else random_curve(genus, seed)
    int genus = 2;
    std::uint64_t seed = 1;
    std::vector<std::string> families;  // empty: every family that applies at this genus
    std::map<std::string, double> tolerances;
    int quad_order = 96;
    double theta_tol = 1e-12;
    int cap = 500;              // bindings per family before sampling kicks in
    bool heavy = false;         // order-4 tensors and the multiplicity-4 conjecture
    std::string period_cache;   // JSON file; empty disables
};

struct CalibrationRow {
    std::string ch;
    int phase_eighths = 0;
    double residual = 0.0;
};

struct FamilyTiming {
    std::string family;
    std::size_t records = 0;
    std::size_t candidates = 0;  // bindings before sampling
    double seconds = 0.0;
};

struct Report {
    CurveSpec curve;
    double est_error = 0.0;
    std::vector<CalibrationRow> calibration;
    std::vector<VerificationRecord> records;
    std::size_t pass = 0, fail = 0;
    std::vector<FamilyTiming> timings;
    std::map<std::string, double> tolerances;
};

// 2g+1 sorted points, uniform on [-10, 10], pairwise gaps >= 0.3.
CurveSpec random_curve(int genus, std::uint64_t seed);

// Every family id in execution order.
const std::vector<std::string>& suite_families();
double default_tolerance(const std::string& family);
// Throws HarnessError on an unknown id.
void check_family(const std::string& family);

Report run_suite(const SuiteConfig& cfg);

// Wall times are omitted unless asked for, so repeated runs are byte-identical.
nlohmann::json report_to_json(const Report& r, bool with_seconds = false);
std::string report_to_text(const Report& r, bool with_seconds = false);

}  // namespace thomae
