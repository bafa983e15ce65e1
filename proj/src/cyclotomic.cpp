#include "ccw/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ccw {

std::uint64_t mult_order(std::uint64_t q, std::uint64_t N) {
    if (N == 0) throw ValidationError("cyclotomic: modulus must be positive");
    if (std::gcd(q, N) != 1)
        throw ValidationError("cyclotomic: gcd(" + std::to_string(q) + ", " + std::to_string(N) +
                              ") != 1, multiplicative order undefined");
    if (N == 1) return 1;
    std::uint64_t x = q % N, m = 1;
    while (x != 1) {
        x = x * q % N;
        ++m;
    }
    return m;
}

const Coset& CosetSystem::by_alpha(std::uint64_t alpha) const {
    if (alpha >= n) throw ValidationError("cyclotomic: alpha out of range");
    return cosets[coset_of_alpha[alpha]];
}

std::uint64_t CosetSystem::alpha_of_member(std::uint64_t x) const {
    std::uint64_t T = tn();
    x %= T;
    if (t > 1 && x % t != 1)
        throw ValidationError("cyclotomic: residue " + std::to_string(x) + " is not in S (not 1 mod " +
                              std::to_string(t) + ")");
    return ((x + T - 1) % T) / t;
}

std::shared_ptr<const CosetSystem> cosets_in_S(std::uint64_t q, std::uint64_t n, std::uint64_t t) {
    if (q < 2 || n < 1 || t < 1) throw ValidationError("cyclotomic: need q >= 2, n >= 1, t >= 1");
    if (std::gcd(n, q) != 1)
        throw ValidationError("cyclotomic: gcd(n, q) != 1 (repeated-root case unsupported)");
    if ((q - 1) % t != 0) throw ValidationError("cyclotomic: t must divide q - 1");

    auto sys = std::make_shared<CosetSystem>();
    sys->q = q;
    sys->n = n;
    sys->t = t;
    std::uint64_t T = t * n;
    sys->coset_of_alpha.assign(n, UINT32_MAX);

    std::vector<bool> seen(n, false);
    for (std::uint64_t alpha = 0; alpha < n; ++alpha) {
        if (seen[alpha]) continue;
        Coset c;
        c.alpha = alpha;
        c.rep = 1 + t * alpha;
        std::uint64_t x = c.rep % T;
        std::uint64_t start = x;
        do {
            c.members.push_back(x);
            std::uint64_t i = ((x + T - 1) % T) / t;
            seen[i] = true;
            x = x * q % T;
        } while (x != start);
        std::sort(c.members.begin(), c.members.end());
        std::uint32_t idx = static_cast<std::uint32_t>(sys->cosets.size());
        for (std::uint64_t m : c.members) sys->coset_of_alpha[((m + T - 1) % T) / t] = idx;
        sys->cosets.push_back(std::move(c));
    }

    std::uint64_t total = 0;
    for (const Coset& c : sys->cosets) total += c.size();
    internal_check(total == n, "cyclotomic: cosets do not partition S");
    return sys;
}

const Coset& coset_of(std::uint64_t rep, const CosetSystem& system) {
    return system.by_alpha(system.alpha_of_member(rep));
}

} // namespace ccw
