#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ccw/code.hpp"
#include "ccw/weights.hpp"

using namespace ccw;

namespace {

Code example_code(std::uint32_t p, std::uint64_t n, std::int64_t lambda,
                  std::vector<std::uint64_t> reps) {
    CodeParams pr = make_code_params(p, 1, n, LambdaSpec::value(lambda));
    auto system = cosets_in_S(pr.q(), n, pr.t);
    std::vector<std::uint64_t> alphas;
    for (std::uint64_t r : reps) alphas.push_back(coset_of(r, *system).alpha);
    return build_code_small_fields(pr, system, alphas);
}

WeightDistribution expect(std::uint64_t n,
                          std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    WeightDistribution d;
    d.counts.assign(n + 1, 0);
    for (auto [w, c] : pairs) d.counts[w] = c;
    return d;
}

} // namespace

TEST_CASE("worked example weight distributions") {
    CHECK(weight_distribution_serial(example_code(5, 18, 4, {3})) ==
          expect(18, {{0, 1}, {12, 12}, {18, 12}}));
    CHECK(weight_distribution_serial(example_code(7, 32, 2, {10})) ==
          expect(32, {{0, 1}, {28, 48}}));
    CHECK(weight_distribution_serial(example_code(3, 91, 2, {91, 7})) ==
          expect(91, {{0, 1}, {49, 26}, {63, 26}, {70, 26}, {91, 2}}));
    CHECK(weight_distribution_serial(example_code(3, 65, 2, {65, 5})) ==
          expect(65, {{0, 1}, {35, 26}, {45, 26}, {50, 26}, {65, 2}}));
}

TEST_CASE("brute-force cross-check of the Gray walk") {
    Code code = example_code(3, 13, 1, {1, 0 + 13});  // rep 13 = residue 0 coset
    std::uint64_t total = codeword_count(code, 1 << 20);
    WeightDistribution direct;
    direct.counts.assign(code.n() + 1, 0);
    for_each_codeword(code, 0, total, [&](std::uint64_t, std::span<const std::uint16_t> w) {
        direct.counts[hamming_weight(w)]++;
    });
    CHECK(weight_distribution_serial(code) == direct);
}

TEST_CASE("partitioned enumeration has an identical union") {
    Code code = example_code(5, 18, 4, {3, 9});
    std::uint64_t total = codeword_count(code, 1 << 20);
    std::set<std::vector<std::uint16_t>> whole, pieces;
    for_each_codeword(code, 0, total, [&](std::uint64_t, std::span<const std::uint16_t> w) {
        whole.insert({w.begin(), w.end()});
    });
    std::uint64_t cuts[4] = {0, total / 3, total / 2 + 1, total};
    for (int i = 0; i + 1 < 4; ++i)
        for_each_codeword(code, cuts[i], cuts[i + 1],
                          [&](std::uint64_t, std::span<const std::uint16_t> w) {
                              pieces.insert({w.begin(), w.end()});
                          });
    CHECK(whole == pieces);
    CHECK(whole.size() == total);
}

TEST_CASE("parallel histogram equals the serial reference for any blocking") {
    Code code = example_code(3, 26, 2, {3, 1});
    WeightDistribution serial = weight_distribution_serial(code);
    for (int threads : {1, 2, 3, 8}) {
        for (std::uint64_t min_block : {1ull, 64ull, 4096ull}) {
            EnumOptions opt;
            opt.threads = threads;
            opt.min_block = min_block;
            CHECK(weight_distribution(code, opt) == serial);
        }
    }
}

TEST_CASE("weight distribution invariants") {
    Code code = example_code(5, 18, 4, {1});
    WeightDistribution dist = weight_distribution(code);
    CHECK(dist.total() == 15625);
    CHECK(dist.counts[0] == 1);
    CHECK(dist.distinct_nonzero() >= 1);
}
