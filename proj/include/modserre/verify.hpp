#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "modserre/pipeline.hpp"

namespace modserre {

struct CheckResult {
    std::string id;   // criterion id, e.g. "A3"
    std::string name; // what was checked
    bool passed = false;
    std::string expected;
    std::string actual;
};

struct VerifyOptions {
    ModuliTable table;
    // Text the table was read from; used by the ingestion round trip.
    std::string table_text;
    DeltaMode mode = DeltaMode::graded;
    int lambda_max = 5;
    int random_samples = 100;
    std::uint64_t seed = 20240917;
};

// Frozen reference values.
namespace reference {
HodgePoly headline_rank();   // q^7 + 5q^6 + 16q^5 + 29q^4 + 29q^3 + 16q^2 + 5q + 1
HodgePoly boundary_rank();   // 3q^6 + 15q^5 + 29q^4 + 29q^3 + 16q^2 + 4q
HodgePoly q_poly(std::initializer_list<long> ascending);
} // namespace reference

// Each returns one or more results tagged with the criterion id.
std::vector<CheckResult> check_headline(const VerifyOptions& opts, const SymSeries& psi);
std::vector<CheckResult> check_boundary_correction(const VerifyOptions& opts);
std::vector<CheckResult> check_small_slots(const SymSeries& psi);
std::vector<CheckResult> check_functional_equation(const SymSeries& psi);
std::vector<CheckResult> check_mode_discrimination(const VerifyOptions& opts);
std::vector<CheckResult> check_property_suites(const VerifyOptions& opts);
std::vector<CheckResult> check_ingestion(const VerifyOptions& opts);

// All of the above, in criterion order.
std::vector<CheckResult> run_acceptance(const VerifyOptions& opts);

bool all_passed(const std::vector<CheckResult>& results);

// Random generators for property checks.
HodgePoly random_hodge(std::mt19937_64& rng, int max_degree, bool diagonal);
// A few random terms with lambda-exponent in [1, lambda_max] and weight
// within the truncation; no lambda^0 part.
SymSeries random_series(std::mt19937_64& rng, const Truncation& trunc, int max_terms);

} // namespace modserre
