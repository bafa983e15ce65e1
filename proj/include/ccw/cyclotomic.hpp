#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ccw/errors.hpp"

namespace ccw {

/// One q-cyclotomic coset modulo tn inside S = {1 + t*i | i = 0..n-1}.
/// rep = 1 + t*alpha is kept as an integer in [1, tn]; members are residues
/// mod tn (so for t = 1 the coset of n appears as the residue 0).
struct Coset {
    std::uint64_t alpha = 0;
    std::uint64_t rep = 0;
    std::vector<std::uint64_t> members;  // sorted residues mod tn
    std::uint64_t size() const { return members.size(); }
};

/// The complete partition of S into q-cyclotomic cosets, sorted by alpha.
struct CosetSystem {
    std::uint64_t q = 0, n = 0, t = 0;
    std::vector<Coset> cosets;
    std::vector<std::uint32_t> coset_of_alpha;  // alpha -> index into cosets

    std::uint64_t tn() const { return t * n; }
    const Coset& by_alpha(std::uint64_t alpha) const;
    /// Index of the member residue x in S, i.e. the i with x = 1 + t*i mod tn.
    std::uint64_t alpha_of_member(std::uint64_t x) const;
};

/// Smallest m >= 1 with q^m = 1 (mod N); requires gcd(q, N) = 1.
std::uint64_t mult_order(std::uint64_t q, std::uint64_t N);

std::shared_ptr<const CosetSystem> cosets_in_S(std::uint64_t q, std::uint64_t n, std::uint64_t t);

/// The unique coset containing rep mod tn; ValidationError when rep is not in S.
const Coset& coset_of(std::uint64_t rep, const CosetSystem& system);

} // namespace ccw
