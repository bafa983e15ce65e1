#include "ccw/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "ccw/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccw {

namespace {

std::string orb_err(const std::string& what) { return "orbit: " + what; }

std::uint64_t gcd_with_n(std::span<const ComponentParams> subset, std::uint64_t n) {
    std::uint64_t g = n;
    for (const ComponentParams& c : subset) g = std::gcd(g, c.rep);
    return g;
}

BigUint product_of_sizes(std::span<const ComponentParams> subset, std::uint64_t q) {
    BigUint prod(1);
    for (const ComponentParams& c : subset) prod *= BigUint::pow_minus_one(q, c.size);
    return prod;
}

void check_subset(std::span<const ComponentParams> subset) {
    if (subset.empty()) throw ValidationError(orb_err("empty component subset"));
}

// Disjoint-set over message indices.
struct Dsu {
    std::vector<std::uint32_t> parent;
    explicit Dsu(std::size_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

std::vector<ComponentParams> component_params(const CosetSystem& system,
                                              std::span<const std::uint64_t> alphas) {
    std::vector<ComponentParams> out;
    out.reserve(alphas.size());
    for (std::uint64_t a : alphas) {
        const Coset& c = system.by_alpha(a);
        out.push_back(ComponentParams{c.alpha, c.size(), c.rep});
    }
    std::sort(out.begin(), out.end(),
              [](const ComponentParams& a, const ComponentParams& b) { return a.alpha < b.alpha; });
    return out;
}

BigUint n_rho_cell(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                   std::uint64_t n) {
    check_subset(subset);
    BigUint value = product_of_sizes(subset, q);
    value *= gcd_with_n(subset, n);
    value.div_exact(t * n);
    return value;
}

BigUint n_rho_irreducible(std::uint64_t q, std::uint64_t k, std::uint64_t t, std::uint64_t alpha,
                          std::uint64_t n) {
    ComponentParams c{alpha, k, 1 + t * alpha};
    return n_rho_cell(std::span<const ComponentParams>(&c, 1), q, t, n);
}

BigUint n_rho_m_cell(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                     std::uint64_t n) {
    check_subset(subset);
    DeltaFactor delta = delta_factor(subset, q, t, n);
    BigUint value = product_of_sizes(subset, q);
    value *= gcd_with_n(subset, n);
    value *= delta.num;
    value.div_exact(delta.den);
    value.div_exact(t * n);
    return value;  // = delta * n_rho_cell, every factor exact
}

BigUint n_rho_m_irreducible(std::uint64_t q, std::uint64_t k, std::uint64_t t, std::uint64_t alpha,
                            std::uint64_t n) {
    // closed form gcd((q-1)(1+t*alpha), tn) / ((q-1) tn); equal to the cell
    // specialization, kept as the direct formula and asserted against it.
    std::uint64_t rep = 1 + t * alpha;
    BigUint value = BigUint::pow_minus_one(q, k);
    value *= std::gcd((q - 1) * rep, t * n);
    value.div_exact(q - 1);
    value.div_exact(t * n);
    ComponentParams c{alpha, k, rep};
    internal_check(value == n_rho_m_cell(std::span<const ComponentParams>(&c, 1), q, t, n),
                   orb_err("closed form disagrees with cell specialization"));
    return value;
}

BigUint n_rho_total(std::span<const ComponentParams> components, std::uint64_t q, std::uint64_t t,
                    std::uint64_t n) {
    check_subset(components);
    if (components.size() > kMaxSubsetComponents)
        throw ResourceError(orb_err("too many components for subset expansion"));
    BigUint total(0);
    std::uint32_t limit = 1u << components.size();
    std::vector<ComponentParams> subset;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < components.size(); ++i)
            if (mask & (1u << i)) subset.push_back(components[i]);
        total += n_rho_cell(subset, q, t, n);
    }
    return total;
}

BigUint n_rho_m_total(std::span<const ComponentParams> components, std::uint64_t q, std::uint64_t t,
                      std::uint64_t n) {
    check_subset(components);
    if (components.size() > kMaxSubsetComponents)
        throw ResourceError(orb_err("too many components for subset expansion"));
    BigUint total(0);
    std::uint32_t limit = 1u << components.size();
    std::vector<ComponentParams> subset;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < components.size(); ++i)
            if (mask & (1u << i)) subset.push_back(components[i]);
        total += n_rho_m_cell(subset, q, t, n);
    }
    return total;
}

DeltaFactor delta_factor(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                         std::uint64_t n) {
    check_subset(subset);
    std::uint64_t T = t * n;
    // A rho-orbit of a cell codeword is fixed by the scalar xi^r exactly when
    // one z solves zeta^{z rep_i} = xi^r for every component simultaneously.
    // The simultaneously reachable values form the cyclic group generated by
    // zeta^{P rep_1} with P = T / gcd(T, pairwise rep differences), so the
    // admissible scalar count is gcd(q-1, ord(zeta^{P rep_1})). Treating the
    // component conditions independently (one z per component) overcounts.
    std::uint64_t diff_gcd = 0;
    for (std::size_t i = 1; i < subset.size(); ++i) {
        std::uint64_t a = subset[i].rep, b = subset[0].rep;
        diff_gcd = std::gcd(diff_gcd, a > b ? a - b : b - a);
    }
    std::uint64_t P = T / std::gcd(T, diff_gcd);  // gcd(T, 0) = T for singletons
    std::uint64_t pr = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(P) * subset[0].rep % T);
    std::uint64_t g = pr == 0 ? T : std::gcd(pr, T);
    std::uint64_t reachable = std::gcd(q - 1, T / g);
    // sanity: never above the per-component count
    for (const ComponentParams& c : subset)
        internal_check(std::gcd(q - 1, T / std::gcd(n, c.rep)) % reachable == 0,
                       orb_err("scalar reach count exceeds a per-component bound"));
    return DeltaFactor{reachable, q - 1};
}

bool prop2_subset(std::span<const ComponentParams> subset, std::uint64_t q, std::uint64_t t,
                  std::uint64_t n) {
    return delta_factor(subset, q, t, n).is_one();
}

bool prop2_all(std::span<const ComponentParams> components, std::uint64_t q, std::uint64_t t,
               std::uint64_t n) {
    check_subset(components);
    if (components.size() > kMaxSubsetComponents)
        throw ResourceError(orb_err("too many components for subset expansion"));
    std::uint32_t limit = 1u << components.size();
    std::vector<ComponentParams> subset;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        subset.clear();
        for (std::size_t i = 0; i < components.size(); ++i)
            if (mask & (1u << i)) subset.push_back(components[i]);
        if (!prop2_subset(subset, q, t, n)) return false;
    }
    return true;
}

OracleResult burnside_oracle(const Code& code, OrbitVariant variant, const OracleOptions& opt) {
    const CodeParams& pr = code.spec.params;
    const FieldTable& f = *pr.field;
    std::uint64_t n = pr.n, T = pr.tn(), q = code.q(), k = code.dimension;
    std::uint64_t total = codeword_count(code, opt.cap);
    if (total < 2) throw ValidationError(orb_err("zero-dimensional code has no nonzero codewords"));

    std::vector<std::uint16_t> flat = enumerate_codewords(code, opt.cap);
    std::unordered_map<std::string, std::uint32_t> index;
    index.reserve(static_cast<std::size_t>(total) * 2);
    const char* base = reinterpret_cast<const char*>(flat.data());
    std::size_t stride_bytes = static_cast<std::size_t>(n) * sizeof(std::uint16_t);
    for (std::uint64_t i = 0; i < total; ++i)
        index.emplace(std::string(base + i * stride_bytes, stride_bytes), static_cast<std::uint32_t>(i));

    auto lookup = [&](const std::vector<std::uint16_t>& w) -> std::uint32_t {
        auto it = index.find(std::string(reinterpret_cast<const char*>(w.data()), stride_bytes));
        internal_check(it != index.end(), orb_err("code not closed under the group action"));
        return it->second;
    };

    // orbit closure under the generators
    std::vector<std::uint16_t> lambda_row = f.scalar_table(pr.lambda);
    Fe xi = f.generator();
    std::vector<std::uint16_t> xi_row = f.scalar_table(xi);

    Dsu dsu(static_cast<std::size_t>(total));
    std::vector<std::uint16_t> tmp(n);
    for (std::uint64_t i = 1; i < total; ++i) {
        const std::uint16_t* w = flat.data() + i * n;
        tmp[0] = lambda_row[w[n - 1]];
        for (std::uint64_t j = 1; j < n; ++j) tmp[j] = w[j - 1];
        dsu.unite(static_cast<std::uint32_t>(i), lookup(tmp));
        if (variant == OrbitVariant::ShiftScalar && q > 2) {
            for (std::uint64_t j = 0; j < n; ++j) tmp[j] = xi_row[w[j]];
            dsu.unite(static_cast<std::uint32_t>(i), lookup(tmp));
        }
    }

    OracleResult out;
    out.nonzero_codewords = total - 1;
    out.orbit_of.assign(static_cast<std::size_t>(total), UINT32_MAX);
    out.weights.assign(static_cast<std::size_t>(total), 0);
    std::unordered_map<std::uint32_t, std::uint32_t> relabel;
    for (std::uint64_t i = 1; i < total; ++i) {
        std::uint32_t root = dsu.find(static_cast<std::uint32_t>(i));
        auto [it, inserted] = relabel.emplace(root, static_cast<std::uint32_t>(relabel.size()));
        out.orbit_of[i] = it->second;
        out.weights[i] = hamming_weight(std::span<const std::uint16_t>(flat.data() + i * n, n));
    }
    out.orbit_count = relabel.size();

    // Burnside cross-check: |Fix(g)| = q^nullity(A_g - I) - 1 with A_g the
    // action of sigma_b rho^r on the RREF basis, read off at the pivot columns.
    // A_{r,b} = b * A_r, so the shift chain is walked once and the k x k
    // matrices are processed in blocks.
    std::uint64_t scalars = variant == OrbitVariant::ShiftScalar ? q - 1 : 1;
    if (T * scalars > (std::uint64_t{1} << 22))
        throw ResourceError(orb_err("oracle group size tn(q-1) = " + std::to_string(T * scalars) +
                                    " too large"));
    RrefResult basis = rref(f, code.rows);
    internal_check(basis.rows.size() == k, orb_err("generator matrix rank deficiency"));

    std::uint64_t grand_total = 0;
    const std::uint64_t block = 4096;
    std::vector<std::vector<std::uint16_t>> cur = basis.rows;
    std::vector<std::vector<std::uint16_t>> amats;  // block of k x k matrices, flattened rows
    amats.reserve(static_cast<std::size_t>(std::min(block, T)));
    std::uint64_t processed = 0;
    while (processed < T) {
        amats.clear();
        std::uint64_t in_block = std::min(block, T - processed);
        for (std::uint64_t step = 0; step < in_block; ++step) {
            for (std::uint64_t i = 0; i < k; ++i) {
                auto& row = cur[i];
                std::uint16_t wrapped = lambda_row[row[n - 1]];
                for (std::uint64_t j = n; j-- > 1;) row[j] = row[j - 1];
                row[0] = wrapped;
            }
            std::vector<std::uint16_t> a(k * k);
            for (std::uint64_t i = 0; i < k; ++i)
                for (std::uint64_t j = 0; j < k; ++j) a[i * k + j] = cur[i][basis.pivots[j]];
            amats.push_back(std::move(a));
        }

        std::int64_t tasks = static_cast<std::int64_t>(in_block * scalars);
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : grand_total) schedule(dynamic, 16) if (!omp_in_parallel())
#endif
        for (std::int64_t idx = 0; idx < tasks; ++idx) {
            const auto& a = amats[static_cast<std::size_t>(idx) % in_block];
            std::uint64_t s = static_cast<std::uint64_t>(idx) / in_block;
            Fe b = f.pow(xi, static_cast<std::int64_t>(s));
            std::vector<std::vector<std::uint16_t>> mat(k, std::vector<std::uint16_t>(k, 0));
            for (std::uint64_t i = 0; i < k; ++i) {
                for (std::uint64_t j = 0; j < k; ++j) {
                    Fe v = f.mul(b, f.from_encoding(a[i * k + j]));
                    if (i == j) v = f.sub(v, f.one());
                    mat[i][j] = static_cast<std::uint16_t>(f.encoding(v));
                }
            }
            std::uint64_t nullity = k - rank(f, std::move(mat));
            std::uint64_t fixed = 1;
            for (std::uint64_t i = 0; i < nullity; ++i) fixed *= q;
            grand_total += fixed - 1;
        }
        processed += in_block;
    }

    std::uint64_t group = T * scalars;
    internal_check(grand_total % group == 0, orb_err("Burnside sum not divisible by group size"));
    out.burnside_count = grand_total / group;
    internal_check(out.burnside_count == out.orbit_count,
                   orb_err("Burnside average disagrees with closure partition: " +
                           std::to_string(out.burnside_count) + " vs " +
                           std::to_string(out.orbit_count)));
    return out;
}

OrbitReport bounds_report(const Code& code) {
    const CodeParams& pr = code.spec.params;
    std::uint64_t q = code.q(), t = pr.t, n = pr.n;
    auto components = component_params(*code.spec.system, code.spec.alphas);
    if (components.size() > kMaxSubsetComponents)
        throw ResourceError(orb_err("too many components for subset expansion"));

    OrbitReport rep;
    rep.n_rho = BigUint(0);
    rep.n_rho_m = BigUint(0);
    rep.prop2_overall = true;
    rep.delta_all_one = true;

    std::uint32_t limit = 1u << components.size();
    std::vector<ComponentParams> subset;
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        subset.clear();
        PerSubsetTerm term;
        term.mask = mask;
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (mask & (1u << i)) {
                subset.push_back(components[i]);
                term.alphas.push_back(components[i].alpha);
            }
        }
        term.n_rho = n_rho_cell(subset, q, t, n);
        term.n_rho_m = n_rho_m_cell(subset, q, t, n);
        term.delta = delta_factor(subset, q, t, n);
        term.prop2 = term.delta.is_one();
        // cell/delta identity: n_rho_m = delta * n_rho exactly
        BigUint lhs = term.n_rho_m;
        lhs *= term.delta.den;
        BigUint rhs = term.n_rho;
        rhs *= term.delta.num;
        internal_check(lhs == rhs, orb_err("cell/delta identity violated"));

        rep.n_rho += term.n_rho;
        rep.n_rho_m += term.n_rho_m;
        rep.prop2_overall = rep.prop2_overall && term.prop2;
        rep.delta_all_one = rep.delta_all_one && term.delta.is_one();
        rep.per_subset_terms.push_back(std::move(term));
    }
    internal_check(rep.n_rho_m <= rep.n_rho, orb_err("group refinement monotonicity violated"));
    if (rep.prop2_overall)
        internal_check(rep.n_rho == rep.n_rho_m, orb_err("prop2 condition did not force equality"));
    return rep;
}

OrbitReport tightness_report(const Code& code, const ReportOptions& opt) {
    OrbitReport rep = bounds_report(code);

    rep.weights = weight_distribution(code, EnumOptions{opt.enum_cap, opt.threads, 4096});
    rep.distinct_weights = rep.weights->distinct_nonzero();
    internal_check(BigUint(*rep.distinct_weights) <= rep.n_rho_m,
                   orb_err("weight count exceeds the orbit bound"));
    rep.tight_rho = rep.n_rho == BigUint(*rep.distinct_weights);
    rep.tight_rho_m = rep.n_rho_m == BigUint(*rep.distinct_weights);

    if (opt.with_oracle) {
        OracleResult ro = burnside_oracle(code, OrbitVariant::Shift, OracleOptions{opt.oracle_cap});
        OracleResult rm =
            burnside_oracle(code, OrbitVariant::ShiftScalar, OracleOptions{opt.oracle_cap});
        rep.oracle_rho = ro.orbit_count;
        rep.oracle_rho_m = rm.orbit_count;
        internal_check(BigUint(ro.orbit_count) == rep.n_rho,
                       orb_err("shift-orbit oracle disagrees with the formula"));
        internal_check(BigUint(rm.orbit_count) == rep.n_rho_m,
                       orb_err("shift-scalar-orbit oracle disagrees with the formula"));

        auto orbitwise = [&](const OracleResult& res) {
            // tight iff every weight class is contained in a single orbit
            std::unordered_map<std::uint64_t, std::uint32_t> weight_orbit;
            bool ok = true;
            for (std::size_t i = 1; i < res.orbit_of.size(); ++i) {
                auto [it, inserted] = weight_orbit.emplace(res.weights[i], res.orbit_of[i]);
                if (!inserted && it->second != res.orbit_of[i]) ok = false;
            }
            return ok;
        };
        rep.orbitwise_tight_rho = orbitwise(ro);
        rep.orbitwise_tight_rho_m = orbitwise(rm);
        internal_check(*rep.orbitwise_tight_rho == *rep.tight_rho,
                       orb_err("orbitwise tightness check disagrees (shift)"));
        internal_check(*rep.orbitwise_tight_rho_m == *rep.tight_rho_m,
                       orb_err("orbitwise tightness check disagrees (shift-scalar)"));
    }
    return rep;
}

BigUint delsarte_bound(std::uint64_t n, std::uint64_t q, std::uint64_t theta) {
    BigUint sum(0);
    BigUint term(1);  // C(n, j) (q-1)^j
    for (std::uint64_t j = 0; j <= theta && j <= n; ++j) {
        sum += term;
        term *= (n - j);
        term.div_exact(j + 1);
        term *= (q - 1);
    }
    return sum;
}

bool delsarte_upper_check(std::uint64_t q, std::uint64_t k, std::uint64_t n, std::uint64_t theta) {
    return BigUint::pow(q, k) <= delsarte_bound(n, q, theta);
}

} // namespace ccw
