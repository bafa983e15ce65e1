// Acceptance suite: runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ccw/orbit.hpp"
#include "ccw/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ccw;

namespace {

struct Criterion {
    bool pass = false;
    std::string detail;
    double ms = 0;
};

int g_failures = 0;

template <typename Fn>
void run_criterion(int number, const std::string& title, Fn&& fn) {
    Criterion c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        c = fn();
    } catch (const std::exception& ex) {
        c.pass = false;
        c.detail = std::string("exception: ") + ex.what();
    }
    c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!c.pass) ++g_failures;
    std::printf("%s criterion %2d: %s  [%s, %.0f ms]\n", c.pass ? "PASS" : "FAIL", number,
                title.c_str(), c.detail.c_str(), c.ms);
    std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// Criteria 1-4: the built-in example reproductions, each under one second.

Criterion reproduction(const AnalysisRequest& req, std::uint64_t want_rho,
                       std::uint64_t want_rho_m,
                       const std::vector<std::pair<std::uint64_t, std::uint64_t>>& want_dist,
                       const std::vector<std::uint64_t>* want_terms) {
    auto t0 = std::chrono::steady_clock::now();
    Json doc = run_analysis(req);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    Criterion c;
    std::ostringstream detail;
    bool ok = true;
    if (doc["bounds"]["n_rho"] != Json(want_rho)) {
        ok = false;
        detail << "n_rho=" << doc["bounds"]["n_rho"] << " want " << want_rho << "; ";
    }
    if (doc["bounds"]["n_rho_m"] != Json(want_rho_m)) {
        ok = false;
        detail << "n_rho_m=" << doc["bounds"]["n_rho_m"] << " want " << want_rho_m << "; ";
    }
    Json want = Json::array();
    for (auto [w, cnt] : want_dist) want.push_back(Json::array({w, cnt}));
    if (doc["weights"]["distribution"] != want) {
        ok = false;
        detail << "distribution mismatch " << doc["weights"]["distribution"].dump() << "; ";
    }
    if (want_terms != nullptr) {
        std::vector<std::uint64_t> got;
        for (const auto& term : doc["bounds"]["per_subset"])
            got.push_back(term["n_rho"].get<std::uint64_t>());
        std::vector<std::uint64_t> sorted_want = *want_terms;
        std::sort(got.begin(), got.end());
        std::sort(sorted_want.begin(), sorted_want.end());
        if (got != sorted_want) {
            ok = false;
            detail << "per-subset terms mismatch; ";
        }
    }
    if (ms >= 1000.0) {
        ok = false;
        detail << "took " << ms << " ms (budget 1000); ";
    }
    c.pass = ok;
    c.detail = ok ? "exact match in " + std::to_string(static_cast<int>(ms)) + " ms" : detail.str();
    return c;
}

// ---------------------------------------------------------------------------
// Criteria 5-9 share one sweep over the grid q in {2,3,4,5,7}, n <= 30,
// every lambda order, every component subset with q^k <= 2^14.

constexpr std::uint64_t kSweepWordCap = std::uint64_t{1} << 14;

struct InstanceTask {
    std::uint32_t p, e;
    std::uint64_t q, n, t;
};

struct InstanceStats {
    std::uint64_t subsets = 0;
    std::uint64_t oracle_mismatches = 0;
    std::uint64_t chain_violations = 0;
    std::uint64_t prop2_violations = 0;
    std::uint64_t cyclic_subsets = 0;
    std::uint64_t cyclic_mismatches = 0;
    std::uint64_t identity_violations = 0;
    bool lumped = false;
    std::string first_error;

    void note(const std::string& msg) {
        if (first_error.empty()) first_error = msg;
    }
};

void subset_checks(const CodeParams& params, const std::shared_ptr<const CosetSystem>& system,
                   const std::vector<std::uint64_t>& alphas, InstanceStats& st) {
    std::uint64_t q = params.q(), t = params.t, n = params.n;
    auto components = component_params(*system, alphas);
    BigUint want_rho = n_rho_total(components, q, t, n);
    BigUint want_rho_m = n_rho_m_total(components, q, t, n);

    Code code = build_code_small_fields(params, system, alphas);
    OracleResult shift = burnside_oracle(code, OrbitVariant::Shift, OracleOptions{kSweepWordCap});
    OracleResult both =
        burnside_oracle(code, OrbitVariant::ShiftScalar, OracleOptions{kSweepWordCap});

    ++st.subsets;
    bool mismatch = false;
    if (BigUint(shift.orbit_count) != want_rho || BigUint(both.orbit_count) != want_rho_m) {
        ++st.oracle_mismatches;
        mismatch = true;
        std::ostringstream os;
        os << "q=" << q << " n=" << n << " t=" << t << " alphas=";
        for (std::uint64_t a : alphas) os << a << ",";
        os << " oracle=(" << shift.orbit_count << "," << both.orbit_count << ") formula=("
           << want_rho.str() << "," << want_rho_m.str() << ")";
        st.note(os.str());
    }
    if (t == 1) {
        ++st.cyclic_subsets;
        if (mismatch) ++st.cyclic_mismatches;
    }

    WeightDistribution dist = weight_distribution_serial(code, kSweepWordCap);
    BigUint distinct(dist.distinct_nonzero());
    if (!(distinct <= want_rho_m && want_rho_m <= want_rho)) {
        ++st.chain_violations;
        st.note("inequality chain violated at q=" + std::to_string(q) + " n=" + std::to_string(n));
    }

    bool equal_totals = want_rho == want_rho_m;
    if ((t == q - 1 || prop2_all(components, q, t, n)) && !equal_totals) {
        ++st.prop2_violations;
        st.note("prop2 violated at q=" + std::to_string(q) + " n=" + std::to_string(n));
    }
}

void identity_checks(const CodeParams& params, const std::shared_ptr<const CosetSystem>& system,
                     InstanceStats& st) {
    const FieldPtr& f = params.field;
    std::uint64_t n = params.n, T = params.tn();
    Fe lambda = params.lambda;

    auto fail = [&](const std::string& what) {
        ++st.identity_violations;
        st.note("identity '" + what + "' failed at q=" + std::to_string(params.q()) +
                " n=" + std::to_string(n) + " t=" + std::to_string(params.t));
    };

    // coset partition
    std::uint64_t size_sum = 0;
    for (const Coset& c : system->cosets) size_sum += c.size();
    if (size_sum != n) fail("coset partition");

    // shift/scalar commutation and shift order on probe vectors
    {
        std::uint64_t q = params.q();
        std::vector<std::vector<std::uint16_t>> probes;
        std::vector<std::uint16_t> v(n, 0);
        v[0] = 1;
        probes.push_back(v);
        std::uint64_t state = 0x9e3779b97f4a7c15ull ^ (params.q() * 1315423911ull + n * 2654435761ull + params.t);
        std::vector<std::uint16_t> rnd(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            rnd[i] = static_cast<std::uint16_t>(state % q);
        }
        probes.push_back(rnd);
        Fe b = f->generator();
        for (const auto& probe : probes) {
            auto lhs = consta_shift(scalar_mul(b, probe, *f), params);
            auto rhs = scalar_mul(b, consta_shift(probe, params), *f);
            if (lhs != rhs) fail("shift/scalar commutation");
            std::vector<std::uint16_t> cur = probe;
            for (std::uint64_t r = 0; r < T; ++r) cur = consta_shift(cur, params);
            if (cur != probe) fail("shift order tn");
        }
    }

    // ring identities: minimal polynomials and the idempotent system; cosets
    // whose class field exceeds the cap are lumped into one complement block
    RootPlan plan(params, system);
    std::vector<Poly> mins, eps;
    Poly small_product = Poly::one(f);
    Poly eps_sum = Poly::zero(f);
    bool any_lump = false;
    for (const Coset& c : system->cosets) {
        if (!plan.constructible(c.alpha)) {
            any_lump = true;
            continue;
        }
        Poly mp = plan.coset_min_poly(c.alpha);
        if (!mp.is_monic() || mp.degree() != static_cast<std::int64_t>(c.size()))
            fail("minimal polynomial shape");
        small_product = small_product * mp;
        Poly e = plan.coset_idempotent(c.alpha);
        eps_sum = eps_sum + e;
        mins.push_back(std::move(mp));
        eps.push_back(std::move(e));
    }
    Poly ambient = Poly::consta_modulus(f, n, lambda);
    if (any_lump) {
        st.lumped = true;
        auto [lump, rem] = ambient.divmod(small_product);
        if (!rem.is_zero()) {
            fail("complement factor division");
        } else {
            mins.push_back(lump);
            eps.push_back(Poly::one(f) - eps_sum);
        }
    }

    Poly product = Poly::one(f);
    Poly total = Poly::zero(f);
    for (const Poly& mp : mins) product = product * mp;
    for (const Poly& e : eps) total = total + e;
    if (product != ambient) fail("product of minimal polynomials");
    if (total != Poly::one(f)) fail("idempotent sum");
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (eps[i].mul_mod_consta(eps[i], n, lambda) != eps[i]) fail("idempotency");
        for (std::size_t j = i + 1; j < eps.size(); ++j)
            if (!eps[i].mul_mod_consta(eps[j], n, lambda).is_zero()) fail("idempotent orthogonality");
    }
}

InstanceStats run_instance(const InstanceTask& task) {
    InstanceStats st;
    CodeParams params = make_code_params(
        task.p, task.e, task.n, LambdaSpec::gen_power(static_cast<std::int64_t>((task.q - 1) / task.t)));
    internal_check(params.t == task.t, "sweep: lambda order mismatch");
    auto system = cosets_in_S(task.q, task.n, task.t);

    identity_checks(params, system, st);

    // every component subset with q^k <= 2^14, by pruned growth
    std::vector<std::uint64_t> pick;
    std::vector<std::uint64_t> sizes;
    for (const Coset& c : system->cosets) sizes.push_back(c.size());

    std::function<void(std::size_t, std::uint64_t)> grow = [&](std::size_t next, std::uint64_t k) {
        if (!pick.empty()) subset_checks(params, system, pick, st);
        for (std::size_t i = next; i < system->cosets.size(); ++i) {
            std::uint64_t nk = k + sizes[i];
            if (checked_pow_u64(task.q, nk, kSweepWordCap) > kSweepWordCap) continue;
            pick.push_back(system->cosets[i].alpha);
            grow(i + 1, nk);
            pick.pop_back();
        }
    };
    grow(0, 0);
    return st;
}

Criterion sweep_criterion(const std::vector<InstanceStats>& stats, double sweep_ms) {
    std::uint64_t subsets = 0, mismatches = 0;
    std::string first;
    for (const auto& st : stats) {
        subsets += st.subsets;
        mismatches += st.oracle_mismatches;
        if (first.empty() && !st.first_error.empty() && st.oracle_mismatches) first = st.first_error;
    }
    Criterion c;
    c.pass = mismatches == 0 && sweep_ms < 300000.0 && subsets > 1000;
    std::ostringstream os;
    os << subsets << " subsets, " << mismatches << " formula/oracle mismatches, sweep "
       << static_cast<int>(sweep_ms) << " ms";
    if (!first.empty()) os << "; first: " << first;
    c.detail = os.str();
    return c;
}

// ---------------------------------------------------------------------------
// Criterion 10: zeta independence.

Criterion zeta_independence() {
    std::uint64_t instances_checked = 0, comparisons = 0, violations = 0;
    struct Grid {
        std::uint32_t p, e;
        std::uint64_t q;
    };
    for (Grid g : {Grid{2, 1, 2}, {3, 1, 3}, {2, 2, 4}, {5, 1, 5}, {7, 1, 7}}) {
        for (std::uint64_t n = 1; n <= 30 && instances_checked < 12; ++n) {
            if (std::gcd(n, g.q) != 1) continue;
            for (std::uint64_t t = 1; t <= g.q - 1; ++t) {
                if ((g.q - 1) % t != 0) continue;
                LambdaSpec lam = LambdaSpec::gen_power(static_cast<std::int64_t>((g.q - 1) / t));
                std::uint64_t m = mult_order(g.q, t * n);
                if (checked_pow_u64(g.q, m, 1 << 18) > (1 << 18)) continue;

                ContextOptions opt0;
                ZetaContext ctx0 = build_context(g.p, g.e, n, lam, opt0);
                if (ctx0.zeta_choice_count < 2) continue;
                ContextOptions opt1;
                opt1.zeta_choice = ctx0.zeta_choice_count - 1;
                ZetaContext ctx1 = build_context(g.p, g.e, n, lam, opt1);
                if (ctx0.zeta == ctx1.zeta) continue;

                bool used = false;
                for (const Coset& c : ctx0.system->cosets) {
                    if (checked_pow_u64(g.q, c.size(), 1 << 10) > (1 << 10)) continue;
                    Code code0 = build_code(ctx0, {c.alpha});
                    Code code1 = build_code(ctx1, {c.alpha});
                    OrbitReport rep0 = tightness_report(code0);
                    OrbitReport rep1 = tightness_report(code1);
                    ++comparisons;
                    used = true;
                    if (rep0.n_rho != rep1.n_rho || rep0.n_rho_m != rep1.n_rho_m ||
                        *rep0.distinct_weights != *rep1.distinct_weights ||
                        !(*rep0.weights == *rep1.weights))
                        ++violations;
                }
                if (used) ++instances_checked;
            }
        }
    }
    Criterion c;
    c.pass = instances_checked >= 10 && violations == 0;
    std::ostringstream os;
    os << instances_checked << " instances, " << comparisons << " code comparisons, " << violations
       << " violations";
    c.detail = os.str();
    return c;
}

} // namespace

int main() {
    std::vector<std::uint64_t> example2_terms{2, 1, 1};

    run_criterion(1, "example 1: q=5 n=18 lambda=4 coset {3,15}", [&] {
        return reproduction({5, 1, 18, "4", {3}, false, true, false}, 2, 2,
                            {{0, 1}, {12, 12}, {18, 12}}, nullptr);
    });
    run_criterion(2, "example 2: q=3 n=65 lambda=2 cosets {65}+{5,15,45}", [&] {
        return reproduction({3, 1, 65, "2", {65, 5}, false, true, false}, 4, 4,
                            {{0, 1}, {35, 26}, {45, 26}, {50, 26}, {65, 2}}, &example2_terms);
    });
    run_criterion(3, "example 3: q=7 n=32 lambda=2 coset {10,70}", [&] {
        return reproduction({7, 1, 32, "2", {10}, false, true, false}, 1, 1, {{0, 1}, {28, 48}},
                            nullptr);
    });
    run_criterion(4, "example 4: q=3 n=91 lambda=2 cosets {91}+{7,21,63}", [&] {
        return reproduction({3, 1, 91, "2", {91, 7}, false, true, false}, 4, 4,
                            {{0, 1}, {49, 26}, {63, 26}, {70, 26}, {91, 2}}, nullptr);
    });

    // the sweep powering criteria 5 through 9
    std::vector<InstanceTask> tasks;
    {
        struct Grid {
            std::uint32_t p, e;
            std::uint64_t q;
        };
        for (Grid g : {Grid{2, 1, 2}, {3, 1, 3}, {2, 2, 4}, {5, 1, 5}, {7, 1, 7}})
            for (std::uint64_t n = 1; n <= 30; ++n) {
                if (std::gcd(n, g.q) != 1) continue;
                for (std::uint64_t t = 1; t <= g.q - 1; ++t)
                    if ((g.q - 1) % t == 0) tasks.push_back({g.p, g.e, g.q, n, t});
            }
    }
    std::vector<InstanceStats> stats(tasks.size());
    auto sweep_t0 = std::chrono::steady_clock::now();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(tasks.size()); ++i) {
        try {
            stats[i] = run_instance(tasks[i]);
        } catch (const std::exception& ex) {
            stats[i].oracle_mismatches += 1;
            stats[i].identity_violations += 1;
            stats[i].note(std::string("exception: ") + ex.what());
        }
    }
    double sweep_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - sweep_t0)
            .count();

    run_criterion(5, "oracle equivalence sweep (q in {2,3,4,5,7}, n <= 30, q^k <= 2^14)",
                  [&] { return sweep_criterion(stats, sweep_ms); });

    run_criterion(6, "inequality chain distinct <= N_rho_m <= N_rho", [&] {
        std::uint64_t violations = 0;
        for (const auto& st : stats) violations += st.chain_violations;
        Criterion c;
        c.pass = violations == 0;
        c.detail = std::to_string(violations) + " violations";
        return c;
    });

    run_criterion(7, "divisibility condition forces N_rho = N_rho_m", [&] {
        std::uint64_t violations = 0;
        for (const auto& st : stats) violations += st.prop2_violations;
        Criterion c;
        c.pass = violations == 0;
        c.detail = std::to_string(violations) + " violations";
        return c;
    });

    run_criterion(8, "cyclic specialization (lambda = 1) matches the oracle", [&] {
        std::uint64_t subsets = 0, mismatches = 0;
        for (const auto& st : stats) {
            subsets += st.cyclic_subsets;
            mismatches += st.cyclic_mismatches;
        }
        Criterion c;
        c.pass = subsets > 200 && mismatches == 0;
        c.detail = std::to_string(subsets) + " cyclic subsets, " + std::to_string(mismatches) +
                   " mismatches";
        return c;
    });

    run_criterion(9, "algebraic identity suite on every sweep instance", [&] {
        std::uint64_t violations = 0, lumped = 0;
        std::string first;
        for (const auto& st : stats) {
            violations += st.identity_violations;
            lumped += st.lumped;
            if (first.empty() && st.identity_violations && !st.first_error.empty())
                first = st.first_error;
        }
        Criterion c;
        c.pass = violations == 0;
        std::ostringstream os;
        os << stats.size() << " instances, " << violations << " violations, " << lumped
           << " with a lumped complement";
        if (!first.empty()) os << "; first: " << first;
        c.detail = os.str();
        return c;
    });

    run_criterion(10, "zeta independence across admissible choices", [] {
        return zeta_independence();
    });

    if (g_failures == 0) {
        std::printf("ACCEPTANCE: all 10 criteria passed\n");
    } else {
        std::printf("ACCEPTANCE: %d criteria FAILED\n", g_failures);
    }
    return g_failures;
}
