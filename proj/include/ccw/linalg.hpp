#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ccw/gf.hpp"

namespace ccw {

/// Matrix over a FieldTable stored as rows of encodings.
struct RrefResult {
    std::vector<std::vector<std::uint16_t>> rows;  // reduced row-echelon form, zero rows dropped
    std::vector<std::uint32_t> pivots;             // pivot column per row
};

inline RrefResult rref(const FieldTable& f, std::vector<std::vector<std::uint16_t>> rows) {
    RrefResult out;
    if (rows.empty()) return out;
    std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Fe lead = f.from_encoding(rows[r][col]);
        Fe lead_inv = f.inv(lead);
        for (std::size_t j = 0; j < ncols; ++j)
            rows[r][j] = static_cast<std::uint16_t>(
                f.encoding(f.mul(lead_inv, f.from_encoding(rows[r][j]))));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Fe factor = f.from_encoding(rows[i][col]);
            for (std::size_t j = 0; j < ncols; ++j) {
                Fe v = f.sub(f.from_encoding(rows[i][j]),
                             f.mul(factor, f.from_encoding(rows[r][j])));
                rows[i][j] = static_cast<std::uint16_t>(f.encoding(v));
            }
        }
        out.pivots.push_back(static_cast<std::uint32_t>(col));
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

inline std::size_t rank(const FieldTable& f, std::vector<std::vector<std::uint16_t>> rows) {
    return rref(f, std::move(rows)).rows.size();
}

inline bool in_row_space(const FieldTable& f, const RrefResult& basis,
                         std::span<const std::uint16_t> v) {
    std::vector<std::uint16_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        std::uint32_t col = basis.pivots[i];
        if (w[col] == 0) continue;
        Fe factor = f.from_encoding(w[col]);
        for (std::size_t j = 0; j < w.size(); ++j) {
            Fe nv = f.sub(f.from_encoding(w[j]), f.mul(factor, f.from_encoding(basis.rows[i][j])));
            w[j] = static_cast<std::uint16_t>(f.encoding(nv));
        }
    }
    for (std::uint16_t x : w)
        if (x != 0) return false;
    return true;
}

} // namespace ccw
