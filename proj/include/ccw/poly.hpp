#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ccw/gf.hpp"

namespace ccw {

/// Dense univariate polynomial over a FieldTable, little-endian coefficients,
/// normalized (no leading zeros; zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr f) : f_(std::move(f)) {}
    Poly(FieldPtr f, std::vector<Fe> coeffs);

    static Poly zero(FieldPtr f) { return Poly(std::move(f)); }
    static Poly one(FieldPtr f);
    static Poly constant(FieldPtr f, Fe c);
    /// x^n - lambda, the ambient modulus of a constacyclic ring.
    static Poly consta_modulus(FieldPtr f, std::uint64_t n, Fe lambda);

    const FieldPtr& field() const { return f_; }
    const std::vector<Fe>& coeffs() const { return c_; }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    Fe coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fe{}; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Fe s) const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    /// Reduce modulo x^n - lambda (x^{n+j} -> lambda x^j).
    Poly mod_consta(std::uint64_t n, Fe lambda) const;
    Poly mul_mod_consta(const Poly& o, std::uint64_t n, Fe lambda) const;
    /// Multiplication by x modulo x^n - lambda: the shift action on polynomials.
    Poly shift_consta(std::uint64_t n, Fe lambda) const;

    Fe eval(Fe x) const;

    /// Coefficient vector padded to length n (fails if the degree is >= n).
    std::vector<Fe> padded(std::uint64_t n) const;

    std::string str(const std::string& var = "x") const;

private:
    void normalize();
    FieldPtr f_;
    std::vector<Fe> c_;
};

} // namespace ccw
