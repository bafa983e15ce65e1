#include "ccw/poly.hpp"

#include <sstream>

namespace ccw {

Poly::Poly(FieldPtr f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (Fe c : c_) f_->check(c);
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::one(FieldPtr f) {
    Poly p(f);
    p.c_ = {f->one()};
    return p;
}

Poly Poly::constant(FieldPtr f, Fe c) {
    Poly p(std::move(f));
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

Poly Poly::consta_modulus(FieldPtr f, std::uint64_t n, Fe lambda) {
    Poly p(f);
    p.c_.assign(n + 1, Fe{});
    p.c_[0] = f->neg(lambda);
    p.c_[n] = f->one();
    p.normalize();
    return p;
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == f_->one(); }

Poly Poly::operator+(const Poly& o) const {
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Fe{});
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add(coeff(i), o.coeff(i));
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Fe{});
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->sub(coeff(i), o.coeff(i));
    r.normalize();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    Poly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, Fe{});
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
    }
    r.normalize();
    return r;
}

Poly Poly::scaled(Fe s) const {
    Poly r(f_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->mul(c_[i], s);
    r.normalize();
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    if (divisor.is_zero()) throw DomainError("poly: division by zero polynomial");
    Poly rem = *this;
    Poly quot(f_);
    std::int64_t dd = divisor.degree();
    if (rem.degree() >= dd) quot.c_.assign(rem.degree() - dd + 1, Fe{});
    Fe lead_inv = f_->inv(divisor.c_.back());
    while (rem.degree() >= dd) {
        std::size_t shift = static_cast<std::size_t>(rem.degree() - dd);
        Fe q = f_->mul(rem.c_.back(), lead_inv);
        quot.c_[shift] = q;
        for (std::size_t j = 0; j <= static_cast<std::size_t>(dd); ++j)
            rem.c_[shift + j] = f_->sub(rem.c_[shift + j], f_->mul(q, divisor.c_[j]));
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

Poly Poly::mod_consta(std::uint64_t n, Fe lambda) const {
    Poly r(f_);
    r.c_.assign(std::min<std::size_t>(c_.size(), n), Fe{});
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::size_t pos = i % n;
        Fe v = c_[i];
        for (std::uint64_t w = 0; w < i / n; ++w) v = f_->mul(v, lambda);
        if (pos >= r.c_.size()) r.c_.resize(pos + 1, Fe{});
        r.c_[pos] = f_->add(r.c_[pos], v);
    }
    r.normalize();
    return r;
}

Poly Poly::mul_mod_consta(const Poly& o, std::uint64_t n, Fe lambda) const {
    return (*this * o).mod_consta(n, lambda);
}

Poly Poly::shift_consta(std::uint64_t n, Fe lambda) const {
    Poly r(f_);
    if (is_zero()) return r;
    internal_check(c_.size() <= n, "poly: shift_consta needs a reduced polynomial");
    r.c_.assign(n, Fe{});
    for (std::size_t i = 0; i < c_.size(); ++i) {
        std::size_t pos = (i + 1) % n;
        r.c_[pos] = f_->add(r.c_[pos], i + 1 == n ? f_->mul(c_[i], lambda) : c_[i]);
    }
    r.normalize();
    return r;
}

Fe Poly::eval(Fe x) const {
    Fe acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

std::vector<Fe> Poly::padded(std::uint64_t n) const {
    internal_check(c_.size() <= n, "poly: degree too large for padding");
    std::vector<Fe> out = c_;
    out.resize(n, Fe{});
    return out;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::uint32_t enc = f_->encoding(c_[i]);
        if (i == 0 || enc != 1) {
            if (f_->degree() == 1) {
                os << enc;
            } else {
                os << "g^" << c_[i].log;
            }
            if (i > 0) os << "*";
        }
        if (i == 1) os << var;
        if (i > 1) os << var << "^" << i;
    }
    return os.str();
}

} // namespace ccw
