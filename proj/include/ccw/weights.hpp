#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ccw/code.hpp"

namespace ccw {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 22;

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // counts[w] = number of codewords of weight w

    std::uint64_t distinct_nonzero() const {
        std::uint64_t d = 0;
        for (std::size_t w = 1; w < counts.size(); ++w) d += (counts[w] != 0);
        return d;
    }
    std::uint64_t total() const {
        std::uint64_t s = 0;
        for (std::uint64_t c : counts) s += c;
        return s;
    }
    friend bool operator==(const WeightDistribution& a, const WeightDistribution& b) {
        return a.counts == b.counts;
    }
};

struct EnumOptions {
    std::uint64_t cap = kDefaultEnumCap;
    int threads = 0;           // 0 = runtime default
    std::uint64_t min_block = 4096;  // smallest per-task Gray block (tuning/test hook)
};

/// q^k as u64; ResourceError when it exceeds the cap.
std::uint64_t codeword_count(const Code& code, std::uint64_t cap);

/// Lexicographic codeword enumeration over message indices [begin, end);
/// messages are base-q digit vectors, least-significant digit fastest. The
/// same message index always yields the same codeword, so disjoint ranges
/// partition the code.
void for_each_codeword(const Code& code, std::uint64_t begin, std::uint64_t end,
                       const std::function<void(std::uint64_t index,
                                                std::span<const std::uint16_t> word)>& fn);

/// Enumerate the full code into a flat row-major buffer (count x n).
std::vector<std::uint16_t> enumerate_codewords(const Code& code,
                                               std::uint64_t cap = kDefaultEnumCap);

/// Serial reference: modular Gray walk, exactly one scaled-row delta per step.
WeightDistribution weight_distribution_serial(const Code& code,
                                              std::uint64_t cap = kDefaultEnumCap);

/// OpenMP kernel: splits the message space into prefix blocks, Gray-walks each
/// block into a thread-local histogram, merges. Identical output for every
/// thread count and block size.
WeightDistribution weight_distribution(const Code& code, const EnumOptions& opt = {});

} // namespace ccw
