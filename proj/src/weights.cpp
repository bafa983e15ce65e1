#include "ccw/weights.hpp"

#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ccw {

namespace {

std::uint64_t pow_u64_capped(std::uint64_t q, std::uint64_t k, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > cap / q) return cap + 1;
        r *= q;
    }
    return r;
}

// Per-row delta tables for the Gray walk: drow[j][v] = rows[j] scaled by
// fe(v+1 mod q) - fe(v). Stepping message digit j from value v to v+1 mod q
// adds exactly this row.
struct GrayTables {
    std::uint64_t q = 0, n = 0, k = 0;
    std::vector<std::vector<std::uint16_t>> scaled;       // [j*q + v] -> scaled row
    std::vector<std::vector<std::uint16_t>> value_rows;   // [j*q + v] -> rows[j] * fe(v)
    const std::vector<std::uint16_t>* add_tab = nullptr;  // q x q, may be null
    const FieldTable* f = nullptr;

    explicit GrayTables(const Code& code) {
        f = code.spec.params.field.get();
        q = code.q();
        n = code.n();
        k = code.dimension;
        const auto& at = f->add_table();
        add_tab = at.empty() ? nullptr : &at;
        scaled.resize(k * q);
        value_rows.resize(k * q);
        for (std::uint64_t v = 0; v < q; ++v) {
            Fe cur = f->from_encoding(static_cast<std::uint32_t>(v));
            Fe nxt = f->from_encoding(static_cast<std::uint32_t>((v + 1) % q));
            Fe delta = f->sub(nxt, cur);
            auto drow = f->scalar_table(delta);
            auto vrow = f->scalar_table(cur);
            for (std::uint64_t j = 0; j < k; ++j) {
                auto& d = scaled[j * q + v];
                auto& w = value_rows[j * q + v];
                d.resize(n);
                w.resize(n);
                for (std::uint64_t i = 0; i < n; ++i) {
                    d[i] = drow[code.rows[j][i]];
                    w[i] = vrow[code.rows[j][i]];
                }
            }
        }
    }

    void add_row_update_weight(std::vector<std::uint16_t>& word, const std::vector<std::uint16_t>& row,
                               std::int64_t& weight) const {
        if (add_tab != nullptr) {
            const std::uint16_t* tab = add_tab->data();
            for (std::uint64_t i = 0; i < n; ++i) {
                std::uint16_t old = word[i];
                std::uint16_t nw = tab[static_cast<std::size_t>(old) * q + row[i]];
                weight += (nw != 0) - (old != 0);
                word[i] = nw;
            }
        } else {
            for (std::uint64_t i = 0; i < n; ++i) {
                std::uint16_t old = word[i];
                std::uint16_t nw = static_cast<std::uint16_t>(f->enc_add(old, row[i]));
                weight += (nw != 0) - (old != 0);
                word[i] = nw;
            }
        }
    }

    // Codeword of a message index, digits little-endian base q.
    void seed(std::uint64_t index, std::vector<std::uint16_t>& word, std::int64_t& weight) const {
        word.assign(n, 0);
        for (std::uint64_t j = 0; j < k && index != 0; ++j, index /= q) {
            std::uint64_t v = index % q;
            if (v != 0) {
                std::int64_t dummy = 0;
                add_row_update_weight(word, value_rows[j * q + v], dummy);
            }
        }
        weight = static_cast<std::int64_t>(hamming_weight(word));
    }

    // Gray-walk `steps` messages starting from the all-zero low digits, the
    // word already seeded with the fixed high digits. Counts the seed too.
    void walk_block(std::uint64_t low_digits, std::uint64_t steps, std::vector<std::uint16_t>& word,
                    std::int64_t weight, std::vector<std::uint64_t>& hist) const {
        std::vector<std::uint32_t> counter(low_digits, 0);
        std::vector<std::uint32_t> gray(low_digits, 0);
        hist[static_cast<std::size_t>(weight)]++;
        for (std::uint64_t s = 1; s < steps; ++s) {
            std::uint64_t pos = 0;
            while (counter[pos] == q - 1) {
                counter[pos] = 0;
                ++pos;
            }
            counter[pos]++;
            std::uint32_t v = gray[pos];
            add_row_update_weight(word, scaled[pos * q + v], weight);
            gray[pos] = static_cast<std::uint32_t>((v + 1) % q);
            hist[static_cast<std::size_t>(weight)]++;
        }
    }
};

} // namespace

std::uint64_t codeword_count(const Code& code, std::uint64_t cap) {
    std::uint64_t total = pow_u64_capped(code.q(), code.dimension, cap);
    if (total > cap)
        throw ResourceError("weights: q^k = " + std::to_string(code.q()) + "^" +
                            std::to_string(code.dimension) + " exceeds the enumeration cap " +
                            std::to_string(cap));
    return total;
}

void for_each_codeword(const Code& code, std::uint64_t begin, std::uint64_t end,
                       const std::function<void(std::uint64_t, std::span<const std::uint16_t>)>& fn) {
    if (begin >= end) return;
    GrayTables tabs(code);
    std::uint64_t q = code.q(), k = code.dimension;

    std::vector<std::uint32_t> digits(k, 0);
    std::uint64_t idx = begin;
    std::vector<std::uint16_t> word;
    std::int64_t weight = 0;
    tabs.seed(begin, word, weight);
    {
        std::uint64_t v = begin;
        for (std::uint64_t j = 0; j < k; ++j, v /= q) digits[j] = static_cast<std::uint32_t>(v % q);
    }
    fn(idx, word);
    while (++idx < end) {
        // lexicographic odometer; wrapping digits apply the same +1 (mod q) delta rows
        std::uint64_t pos = 0;
        for (;;) {
            std::uint32_t v = digits[pos];
            std::int64_t dummy = 0;
            tabs.add_row_update_weight(word, tabs.scaled[pos * q + v], dummy);
            if (v + 1 < q) {
                digits[pos] = v + 1;
                break;
            }
            digits[pos] = 0;
            ++pos;
        }
        fn(idx, word);
    }
}

std::vector<std::uint16_t> enumerate_codewords(const Code& code, std::uint64_t cap) {
    std::uint64_t total = codeword_count(code, cap);
    std::uint64_t n = code.n();
    std::vector<std::uint16_t> flat(total * n);
    for_each_codeword(code, 0, total, [&](std::uint64_t idx, std::span<const std::uint16_t> w) {
        std::copy(w.begin(), w.end(), flat.begin() + static_cast<std::ptrdiff_t>(idx * n));
    });
    return flat;
}

WeightDistribution weight_distribution_serial(const Code& code, std::uint64_t cap) {
    std::uint64_t total = codeword_count(code, cap);
    GrayTables tabs(code);
    WeightDistribution out;
    out.counts.assign(code.n() + 1, 0);
    std::vector<std::uint16_t> word(code.n(), 0);
    tabs.walk_block(code.dimension, total, word, 0, out.counts);
    internal_check(out.total() == total && out.counts[0] == 1,
                   "weights: histogram total mismatch (serial)");
    return out;
}

WeightDistribution weight_distribution(const Code& code, const EnumOptions& opt) {
    std::uint64_t total = codeword_count(code, opt.cap);
    std::uint64_t q = code.q(), k = code.dimension;

    // split: low digits are Gray-walked, high digits define the blocks
    std::uint64_t low = k;
    std::uint64_t low_count = total;
    int threads = opt.threads;
#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#else
    if (threads <= 0) threads = 1;
#endif
    std::uint64_t want_blocks = static_cast<std::uint64_t>(threads) * 8;
    while (low > 0 && low_count > opt.min_block && total / low_count < want_blocks) {
        --low;
        low_count /= q;
    }
    std::uint64_t blocks = total / low_count;

    if (blocks <= 1 || threads == 1) return weight_distribution_serial(code, opt.cap);

    GrayTables tabs(code);
    std::uint64_t n = code.n();
    std::vector<std::vector<std::uint64_t>> partial;

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
    {
#pragma omp single
        partial.assign(static_cast<std::size_t>(omp_get_num_threads()),
                       std::vector<std::uint64_t>(n + 1, 0));
        std::vector<std::uint64_t>& hist = partial[static_cast<std::size_t>(omp_get_thread_num())];
        std::vector<std::uint16_t> word;
        std::int64_t weight = 0;
#pragma omp for schedule(dynamic)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
            tabs.seed(static_cast<std::uint64_t>(b) * low_count, word, weight);
            tabs.walk_block(low, low_count, word, weight, hist);
        }
    }
#else
    partial.assign(1, std::vector<std::uint64_t>(n + 1, 0));
    std::vector<std::uint16_t> word;
    std::int64_t weight = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
        tabs.seed(b * low_count, word, weight);
        tabs.walk_block(low, low_count, word, weight, partial[0]);
    }
#endif

    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    for (const auto& hist : partial)
        for (std::size_t w = 0; w <= n; ++w) out.counts[w] += hist[w];
    internal_check(out.total() == total && out.counts[0] == 1,
                   "weights: histogram total mismatch (parallel)");
    return out;
}

} // namespace ccw
