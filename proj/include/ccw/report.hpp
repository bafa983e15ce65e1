#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccw/code.hpp"
#include "ccw/orbit.hpp"

namespace ccw {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Everything one analysis run needs, as it arrives from the CLI.
struct AnalysisRequest {
    std::uint32_t p = 0;
    std::uint32_t e = 1;
    std::uint64_t n = 0;
    std::string lambda;               // "4" or "g^3"
    std::vector<std::uint64_t> cosets;  // representatives, any member of its coset
    bool all_cosets = false;
    bool with_weights = true;
    bool with_oracle = false;
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::uint64_t oracle_cap = kDefaultOracleCap;
};

LambdaSpec parse_lambda(const std::string& text);
AnalysisRequest request_from_json(const Json& j);

/// Validates the request, runs the full pipeline, and serializes a report.
/// Throws Validation/Resource/Internal errors; never returns a partial document.
Json run_analysis(const AnalysisRequest& req);

/// Coset listing document for the `cosets` subcommand.
Json coset_listing(std::uint32_t p, std::uint32_t e, std::uint64_t n, const std::string& lambda);

std::string weights_csv(const WeightDistribution& dist);

struct SearchRecord {
    std::vector<std::uint64_t> alphas;
    std::vector<std::uint64_t> reps;
    std::uint64_t dimension = 0;
    BigUint n_rho;
    BigUint n_rho_m;
    std::optional<std::uint64_t> distinct_weights;
    bool tight_rho = false;
    bool tight_rho_m = false;
    bool skipped = false;  // over the enumeration cap; bounds only
};

struct SearchOptions {
    std::uint64_t max_components = 1;
    std::uint64_t max_subsets = 10000;
    std::uint64_t enum_cap = kDefaultEnumCap;
};

std::vector<SearchRecord> run_search(std::uint32_t p, std::uint32_t e, std::uint64_t n,
                                     const std::string& lambda, const SearchOptions& opt);

std::string search_csv(const std::vector<SearchRecord>& records);
Json search_json(const std::vector<SearchRecord>& records);

/// Fixed reproduction table: the four built-in example analyses with embedded
/// expected values. Returns pass/fail per row; `tamper` flips one expected
/// value to prove the harness detects mismatches.
struct ReproduceRow {
    std::string name;
    bool pass = false;
    std::string detail;
};
std::vector<ReproduceRow> run_reproduce(bool tamper = false);

} // namespace ccw
