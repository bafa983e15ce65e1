#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ccw/errors.hpp"

namespace ccw {

/// Unsigned big integer, little-endian u64 limbs, no trailing zero limbs.
/// Orbit counts are exact by definition, so the only division offered is
/// exact division; a remainder always signals a bug upstream.
class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t v) { // NOLINT(google-explicit-constructor)
        if (v != 0) limbs_.push_back(v);
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUint& operator+=(const BigUint& o) {
        if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 s = carry + limbs_[i];
            if (i < o.limbs_.size()) s += o.limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(s);
            carry = s >> 64;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    BigUint& operator*=(std::uint64_t m) {
        if (m == 0) {
            limbs_.clear();
            return *this;
        }
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 p = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(p);
            carry = p >> 64;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    /// Exact division by a small divisor; throws InternalError on a remainder.
    BigUint& div_exact(std::uint64_t d) {
        internal_check(d != 0, "BigUint: division by zero");
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = static_cast<std::uint64_t>(cur / d);
            rem = cur % d;
        }
        internal_check(rem == 0, "BigUint: expected exact division, got remainder");
        trim();
        return *this;
    }

    BigUint& operator*=(const BigUint& o) {
        if (is_zero() || o.is_zero()) {
            limbs_.clear();
            return *this;
        }
        std::vector<std::uint64_t> out(limbs_.size() + o.limbs_.size(), 0);
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
                unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[i]) * o.limbs_[j] +
                                        out[i + j] + carry;
                out[i + j] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
            }
            std::size_t pos = i + o.limbs_.size();
            while (carry != 0) {
                unsigned __int128 cur = carry + out[pos];
                out[pos] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
                ++pos;
            }
        }
        limbs_ = std::move(out);
        trim();
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator*(BigUint a, std::uint64_t m) { return a *= m; }
    friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }

    int compare(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size())
            return limbs_.size() < o.limbs_.size() ? -1 : 1;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
        }
        return 0;
    }
    friend bool operator==(const BigUint& a, const BigUint& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigUint& a, const BigUint& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return a.compare(b) <= 0; }

    bool fits_u64() const { return limbs_.size() <= 1; }
    std::uint64_t as_u64() const {
        internal_check(fits_u64(), "BigUint: value does not fit in 64 bits");
        return limbs_.empty() ? 0 : limbs_[0];
    }

    std::string str() const {
        if (limbs_.empty()) return "0";
        std::vector<std::uint64_t> work = limbs_;
        std::string out;
        while (!work.empty()) {
            unsigned __int128 rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | work[i];
                work[i] = static_cast<std::uint64_t>(cur / 10);
                rem = cur % 10;
            }
            out.push_back(static_cast<char>('0' + static_cast<int>(rem)));
            while (!work.empty() && work.back() == 0) work.pop_back();
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    /// q^k - 1 without a subtraction: Horner over (q-1) digits.
    static BigUint pow_minus_one(std::uint64_t q, std::uint64_t k) {
        BigUint r;
        for (std::uint64_t i = 0; i < k; ++i) {
            r *= q;
            r += BigUint(q - 1);
        }
        return r;
    }

    static BigUint pow(std::uint64_t q, std::uint64_t k) {
        BigUint r(1);
        for (std::uint64_t i = 0; i < k; ++i) r *= q;
        return r;
    }

private:
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint64_t> limbs_;
};

} // namespace ccw
