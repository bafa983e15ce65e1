#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "ccw/errors.hpp"

namespace ccw {

/// Element of a FieldTable: the discrete log of a nonzero element relative to
/// the field's canonical primitive element, or the zero marker.
struct Fe {
    static constexpr std::int64_t kZeroLog = -1;
    std::int64_t log = kZeroLog;

    bool is_zero() const { return log < 0; }
    friend bool operator==(Fe a, Fe b) { return a.log == b.log; }
    friend bool operator!=(Fe a, Fe b) { return a.log != b.log; }
};

inline constexpr std::uint64_t kDefaultTableCap = std::uint64_t{1} << 24;

/// F_{p^d} realized by full exp/log tables over the canonical (lexicographically
/// smallest primitive) modulus. Immutable after construction and safe to share
/// across threads. Elements are encoded as base-p digit packings of the
/// polynomial representation, so encodings run 0..p^d-1 and scalars sit at 0..p-1.
class FieldTable {
public:
    static std::shared_ptr<const FieldTable> make(std::uint32_t p, std::uint32_t d,
                                                  std::uint64_t table_cap = kDefaultTableCap);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t group_order() const { return order_ - 1; }
    /// Monic modulus, little-endian coefficients over F_p, length d+1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    /// Canonical primitive element (the residue of y; the smallest primitive
    /// root mod p when d = 1).
    Fe generator() const { return Fe{group_order() == 1 ? 0 : 1}; }
    Fe zero() const { return Fe{}; }
    Fe one() const { return Fe{0}; }

    Fe from_encoding(std::uint32_t enc) const;
    std::uint32_t encoding(Fe x) const;
    /// The scalar v mod p (prime-subfield element).
    Fe from_int(std::int64_t v) const;

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
    Fe pow(Fe a, std::int64_t e) const;

    /// Smallest t >= 1 with x^t = 1; DomainError on zero.
    std::uint64_t element_order(Fe x) const;

    /// Digit-wise addition on encodings (XOR when p = 2).
    std::uint32_t enc_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t enc_neg(std::uint32_t a) const;

    /// q x q addition table on encodings; built eagerly for orders <= 1024,
    /// empty beyond that (kernels fall back to enc_add).
    const std::vector<std::uint16_t>& add_table() const { return add_table_; }
    /// Encoding map x -> s*x for a fixed scalar s.
    std::vector<std::uint16_t> scalar_table(Fe s) const;

    /// ValidationError when x cannot belong to this field.
    void check(Fe x) const;

private:
    FieldTable() = default;

    std::uint32_t p_ = 0, d_ = 0;
    std::uint64_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = encoding of g^i, length order-1
    std::vector<std::int32_t> log_;   // log_[enc], -1 for zero, length order
    std::vector<std::uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const FieldTable>;

/// Shared registry of constructed fields keyed by (p, d).
FieldPtr field(std::uint32_t p, std::uint32_t d, std::uint64_t table_cap = kDefaultTableCap);

/// Lexicographically smallest monic primitive polynomial of degree d over F_p
/// (y - g for d = 1, g the smallest primitive root mod p). Little-endian coefficients.
std::vector<std::uint32_t> find_primitive_poly(std::uint32_t p, std::uint32_t d,
                                               std::uint64_t table_cap = kDefaultTableCap);

/// The canonical subfield embedding F_{p^e} -> F_{p^{e*k}}: the image of the
/// small field's generator is the smallest-log element of the big field whose
/// minimal polynomial over F_p equals the small field's modulus. This makes the
/// map a ring homomorphism, not merely multiplicative.
class Embedding {
public:
    Embedding(FieldPtr sub, FieldPtr sup);

    const FieldPtr& sub() const { return sub_; }
    const FieldPtr& sup() const { return sup_; }

    Fe embed(Fe x) const;
    bool in_image(Fe x) const;
    /// Unique preimage; DomainError("coefficient not in base field") outside the image.
    Fe project(Fe x) const;

private:
    FieldPtr sub_, sup_;
    std::uint64_t stride_ = 1;     // (sup* : sub*) index; image logs are multiples of it
    std::uint64_t gen_image_log_ = 0;
    std::uint64_t proj_mult_ = 0;  // inverse of gen_image_log_/stride_ mod sub group order
};

bool is_prime(std::uint64_t p);
std::vector<std::uint64_t> prime_factors(std::uint64_t x);
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t limit);

} // namespace ccw
