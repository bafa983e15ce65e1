#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ccw/bigint.hpp"
#include "ccw/code.hpp"
#include "ccw/weights.hpp"

namespace ccw {

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 18;
inline constexpr std::uint64_t kMaxSubsetComponents = 20;

/// Check-side component data the closed forms consume.
struct ComponentParams {
    std::uint64_t alpha = 0;
    std::uint64_t size = 0;  // coset size d
    std::uint64_t rep = 0;   // 1 + t*alpha
};

std::vector<ComponentParams> component_params(const CosetSystem& system,
                                              std::span<const std::uint64_t> alphas);

/// Orbit count of the shift group on the nonzero codewords of an irreducible
/// code: (q^k - 1) gcd(1 + t*alpha, n) / (t n). Division asserted exact.
BigUint n_rho_irreducible(std::uint64_t q, std::uint64_t k, std::uint64_t t, std::uint64_t alpha,
                          std::uint64_t n);

/// One cell (components all nonzero): prod (q^{d_i} - 1) gcd(rep_1..rep_l, n) / (t n).
BigUint n_rho_cell(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                   std::uint64_t n);

/// Sum of n_rho_cell over all nonempty subsets of the components.
BigUint n_rho_total(std::span<const ComponentParams> components, std::uint64_t q, std::uint64_t t,
                    std::uint64_t n);

/// Same three under the shift-and-scalar group.
BigUint n_rho_m_irreducible(std::uint64_t q, std::uint64_t k, std::uint64_t t, std::uint64_t alpha,
                            std::uint64_t n);
BigUint n_rho_m_cell(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                     std::uint64_t n);
BigUint n_rho_m_total(std::span<const ComponentParams> components, std::uint64_t q, std::uint64_t t,
                      std::uint64_t n);

/// Per-cell ratio between the two counts: (number of scalars xi^r reachable as
/// a simultaneous shift eigenvalue across all components) / (q-1). Reduces to
/// gcd(q-1, tn/gcd(n, rep)) / (q-1) for a single component; for several
/// components the simultaneity constraint can make it strictly smaller than
/// the intersection of the per-component conditions. The oracle sweep pins
/// this down exhaustively.
struct DeltaFactor {
    std::uint64_t num = 1, den = 1;
    bool is_one() const { return num == den; }
};
DeltaFactor delta_factor(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                         std::uint64_t n);

/// True exactly when delta = 1 for the subset, i.e. every scalar is reachable
/// and the two cell counts coincide. Always true when t = q-1.
bool prop2_subset(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                  std::uint64_t n);
bool prop2_all(std::span<const ComponentParams> components, std::uint64_t q, std::uint64_t t,
               std::uint64_t n);

enum class OrbitVariant { Shift, ShiftScalar };

struct OracleOptions {
    std::uint64_t cap = kDefaultOracleCap;
};

struct OracleResult {
    std::uint64_t orbit_count = 0;
    std::uint64_t burnside_count = 0;       // fixed-point average, asserted equal
    std::uint64_t nonzero_codewords = 0;
    std::vector<std::uint32_t> orbit_of;    // message index -> orbit id (index 0 unused)
    std::vector<std::uint64_t> weights;     // message index -> Hamming weight
};

/// Exhaustive group-action oracle: enumerates the code, closes nonzero
/// codewords under the shift (and, for ShiftScalar, multiplication by the
/// canonical primitive scalar) with a disjoint-set structure, and cross-checks
/// the count against the Burnside fixed-point average computed by linear
/// algebra on the k x k action matrices.
OracleResult burnside_oracle(const Code& code, OrbitVariant variant, const OracleOptions& opt = {});

struct PerSubsetTerm {
    std::uint32_t mask = 0;                 // bitmask over components sorted by alpha
    std::vector<std::uint64_t> alphas;
    BigUint n_rho;
    BigUint n_rho_m;
    DeltaFactor delta;
    bool prop2 = false;
};

struct OrbitReport {
    BigUint n_rho;
    BigUint n_rho_m;
    bool delta_all_one = false;
    bool prop2_overall = false;
    std::vector<PerSubsetTerm> per_subset_terms;
    // filled by tightness_report, absent after bounds_report
    std::optional<WeightDistribution> weights;
    std::optional<std::uint64_t> distinct_weights;
    std::optional<bool> tight_rho;
    std::optional<bool> tight_rho_m;
    std::optional<std::uint64_t> oracle_rho;
    std::optional<std::uint64_t> oracle_rho_m;
    /// Oracle-partition verification of the tightness equivalence (every
    /// weight class inside one orbit); present only when the oracle ran.
    std::optional<bool> orbitwise_tight_rho;
    std::optional<bool> orbitwise_tight_rho_m;
};

struct ReportOptions {
    std::uint64_t enum_cap = kDefaultEnumCap;
    std::uint64_t oracle_cap = kDefaultOracleCap;
    bool with_oracle = false;
    int threads = 0;
};

/// Closed-form side only: per-subset terms, totals, delta and the divisibility
/// condition. No enumeration, so it works at any size.
OrbitReport bounds_report(const Code& code);

/// bounds_report plus the weight distribution, tightness verdicts, and (on
/// request) the exhaustive oracle with the formula-vs-oracle hard assert.
OrbitReport tightness_report(const Code& code, const ReportOptions& opt = {});

/// Size bound from the weight count: q^k <= sum_{j<=theta} C(n,j)(q-1)^j.
BigUint delsarte_bound(std::uint64_t n, std::uint64_t q, std::uint64_t theta);
bool delsarte_upper_check(std::uint64_t q, std::uint64_t k, std::uint64_t n, std::uint64_t theta);

} // namespace ccw
