#include "ccw/gf.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace ccw {

namespace {

std::string fe_err(const std::string& what) { return "gf: " + what; }

// Dense little-endian polynomials over F_p, used only during construction.
using PolyP = std::vector<std::uint32_t>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP mulmod_p(const PolyP& a, const PolyP& b, const PolyP& mod, std::uint32_t p) {
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    // reduce by the monic modulus
    std::size_t md = mod.size() - 1;
    for (std::size_t i = acc.size(); i-- > md;) {
        std::uint64_t c = acc[i] % p;
        if (c == 0) continue;
        acc[i] = 0;
        for (std::size_t j = 0; j < md; ++j)
            acc[i - md + j] = (acc[i - md + j] + c * (p - mod[j] % p)) % p;
    }
    PolyP out(md, 0);
    for (std::size_t i = 0; i < md && i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
    trim(out);
    return out;
}

PolyP powmod_p(PolyP base, std::uint64_t e, const PolyP& mod, std::uint32_t p) {
    PolyP result{1};
    while (e > 0) {
        if (e & 1) result = mulmod_p(result, base, mod, p);
        base = mulmod_p(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

// Remainder of a by monic b over F_p.
PolyP rem_p(PolyP a, const PolyP& b, std::uint32_t p) {
    trim(a);
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint64_t lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t sub = lead * (b[j] % p) % p;
                std::uint64_t cur = a[shift + j];
                a[shift + j] = static_cast<std::uint32_t>((cur + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

bool divisible_by_some_poly_of_degree(const PolyP& f, std::uint32_t deg, std::uint32_t p) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    PolyP div(deg + 1, 0);
    div[deg] = 1;
    for (std::uint64_t k = 0; k < count; ++k) {
        std::uint64_t v = k;
        for (std::uint32_t i = 0; i < deg; ++i) {
            div[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (rem_p(f, div, p).empty()) return true;
    }
    return false;
}

bool is_irreducible(const PolyP& f, std::uint32_t p) {
    std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t deg = 1; deg * 2 <= d; ++deg)
        if (divisible_by_some_poly_of_degree(f, deg, p)) return false;
    return true;
}

// ord(y mod f) == p^d - 1, given f irreducible.
bool root_is_primitive(const PolyP& f, std::uint32_t p, std::uint64_t group) {
    PolyP y{0, 1};
    if (powmod_p(y, group, f, p) != PolyP{1}) return false;
    for (std::uint64_t r : prime_factors(group)) {
        if (powmod_p(y, group / r, f, p) == PolyP{1}) return false;
    }
    return true;
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, base = b % m;
    while (e > 0) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t smallest_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::uint64_t group = p - 1;
    auto factors = prime_factors(group);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t r : factors) {
            if (powmod_u64(g, group / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw InternalError(fe_err("no primitive root found (p not prime?)"));
}

std::uint64_t modinv_u64(std::uint64_t a, std::uint64_t m) {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    internal_check(r == 1, fe_err("modular inverse of non-unit"));
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

} // namespace

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i * i <= x; ++i) {
        if (x % i == 0) {
            out.push_back(i);
            while (x % i == 0) x /= i;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > limit / base) return limit + 1;
        r *= base;
    }
    return r;
}

std::vector<std::uint32_t> find_primitive_poly(std::uint32_t p, std::uint32_t d,
                                               std::uint64_t table_cap) {
    if (!is_prime(p)) throw ValidationError(fe_err("characteristic must be prime: " + std::to_string(p)));
    if (d < 1) throw ValidationError(fe_err("extension degree must be >= 1"));
    std::uint64_t order = checked_pow_u64(p, d, table_cap);
    if (order > table_cap)
        throw ResourceError(fe_err("field order " + std::to_string(p) + "^" + std::to_string(d) +
                                   " exceeds the table cap " + std::to_string(table_cap)));

    if (d == 1) {
        std::uint64_t g = smallest_primitive_root(p);
        return {static_cast<std::uint32_t>((p - g) % p), 1};
    }

    std::uint64_t group = order - 1;
    PolyP f(d + 1, 0);
    f[d] = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
        std::uint64_t v = k;
        for (std::uint32_t i = 0; i < d; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (is_irreducible(f, p) && root_is_primitive(f, p, group)) return f;
    }
    throw InternalError(fe_err("no primitive polynomial found"));
}

std::shared_ptr<const FieldTable> FieldTable::make(std::uint32_t p, std::uint32_t d,
                                                   std::uint64_t table_cap) {
    auto ft = std::shared_ptr<FieldTable>(new FieldTable());
    ft->p_ = p;
    ft->d_ = d;
    ft->modulus_ = find_primitive_poly(p, d, table_cap);
    ft->order_ = checked_pow_u64(p, d, table_cap);

    std::uint64_t group = ft->order_ - 1;
    ft->exp_.resize(group);
    ft->log_.assign(ft->order_, -1);

    // Walk g^i with g = residue of y; digits little-endian base p.
    std::vector<std::uint32_t> cur(d, 0);
    cur[0] = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
        std::uint64_t enc = 0;
        for (std::uint32_t j = d; j-- > 0;) enc = enc * p + cur[j];
        internal_check(enc != 0 && ft->log_[enc] == -1, fe_err("exp table self-check failed"));
        ft->exp_[i] = static_cast<std::uint32_t>(enc);
        ft->log_[enc] = static_cast<std::int32_t>(i);
        // multiply by y
        std::uint32_t carry = cur[d - 1];
        for (std::uint32_t j = d; j-- > 1;) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (carry != 0) {
            for (std::uint32_t j = 0; j < d; ++j) {
                std::uint64_t sub = static_cast<std::uint64_t>(carry) * (ft->modulus_[j] % p) % p;
                cur[j] = static_cast<std::uint32_t>((cur[j] + p - sub) % p);
            }
        }
    }

    if (ft->order_ <= 1024) {
        std::uint64_t n = ft->order_;
        ft->add_table_.resize(n * n);
        for (std::uint64_t a = 0; a < n; ++a)
            for (std::uint64_t b = 0; b < n; ++b)
                ft->add_table_[a * n + b] = static_cast<std::uint16_t>(
                    ft->enc_add(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
    }
    return ft;
}

FieldPtr field(std::uint32_t p, std::uint32_t d, std::uint64_t table_cap) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ft = FieldTable::make(p, d, table_cap);
    cache.emplace(key, ft);
    return ft;
}

Fe FieldTable::from_encoding(std::uint32_t enc) const {
    if (enc >= order_) throw ValidationError(fe_err("encoding out of range"));
    return enc == 0 ? Fe{} : Fe{log_[enc]};
}

std::uint32_t FieldTable::encoding(Fe x) const {
    check(x);
    return x.is_zero() ? 0 : exp_[static_cast<std::size_t>(x.log)];
}

Fe FieldTable::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return from_encoding(static_cast<std::uint32_t>(r));
}

std::uint32_t FieldTable::enc_add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t out = 0, mult = 1;
    while (a != 0 || b != 0) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

std::uint32_t FieldTable::enc_neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0, mult = 1;
    while (a != 0) {
        out += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

void FieldTable::check(Fe x) const {
    if (x.log < Fe::kZeroLog || x.log >= static_cast<std::int64_t>(group_order()))
        throw ValidationError(fe_err("element does not belong to this field (log " +
                                     std::to_string(x.log) + ", order " + std::to_string(order_) + ")"));
}

Fe FieldTable::add(Fe a, Fe b) const {
    check(a);
    check(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::uint32_t enc = enc_add(exp_[a.log], exp_[b.log]);
    return enc == 0 ? Fe{} : Fe{log_[enc]};
}

Fe FieldTable::neg(Fe a) const {
    check(a);
    if (p_ == 2 || a.is_zero()) return a;
    std::uint64_t m = group_order();
    return Fe{static_cast<std::int64_t>((a.log + m / 2) % m)};
}

Fe FieldTable::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe FieldTable::mul(Fe a, Fe b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) return Fe{};
    return Fe{static_cast<std::int64_t>((static_cast<std::uint64_t>(a.log) + b.log) % group_order())};
}

Fe FieldTable::inv(Fe a) const {
    check(a);
    if (a.is_zero()) throw DomainError(fe_err("inverse of zero"));
    std::uint64_t m = group_order();
    return Fe{static_cast<std::int64_t>((m - a.log) % m)};
}

Fe FieldTable::pow(Fe a, std::int64_t e) const {
    check(a);
    if (a.is_zero()) {
        if (e < 0) throw DomainError(fe_err("negative power of zero"));
        return e == 0 ? one() : Fe{};
    }
    std::int64_t m = static_cast<std::int64_t>(group_order());
    std::int64_t er = e % m;
    if (er < 0) er += m;
    return Fe{(a.log * er) % m};
}

std::uint64_t FieldTable::element_order(Fe x) const {
    check(x);
    if (x.is_zero()) throw DomainError(fe_err("multiplicative order of zero"));
    std::uint64_t m = group_order();
    return m / std::gcd(m, static_cast<std::uint64_t>(x.log));
}

std::vector<std::uint16_t> FieldTable::scalar_table(Fe s) const {
    check(s);
    internal_check(order_ <= 0x10000, fe_err("scalar_table requires order <= 2^16"));
    std::vector<std::uint16_t> out(order_, 0);
    if (s.is_zero()) return out;
    for (std::uint64_t enc = 1; enc < order_; ++enc) {
        std::uint64_t lg = (static_cast<std::uint64_t>(log_[enc]) + s.log) % group_order();
        out[enc] = static_cast<std::uint16_t>(exp_[lg]);
    }
    return out;
}

Embedding::Embedding(FieldPtr sub, FieldPtr sup) : sub_(std::move(sub)), sup_(std::move(sup)) {
    if (sub_->characteristic() != sup_->characteristic())
        throw ValidationError(fe_err("embedding requires equal characteristic"));
    std::uint64_t subg = sub_->group_order(), supg = sup_->group_order();
    if ((sub_->order() != sup_->order() && sup_->degree() % sub_->degree() != 0) || supg % subg != 0)
        throw ValidationError(fe_err("no subfield embedding: " + std::to_string(sub_->order()) +
                                     " into " + std::to_string(sup_->order())));
    stride_ = supg / subg;

    if (subg == 1) {
        gen_image_log_ = 0;
        proj_mult_ = 0;
        return;
    }

    std::uint32_t p = sub_->characteristic();
    std::uint32_t e = sub_->degree();
    const auto& want = sub_->modulus();
    for (std::uint64_t j = 1; j < subg + 1; ++j) {
        if (std::gcd(j, subg) != 1) continue;
        std::uint64_t hlog = stride_ * j % supg;
        // minimal polynomial of h over F_p: product over the Frobenius orbit
        std::vector<Fe> mp{sup_->one()};
        Fe conj = Fe{static_cast<std::int64_t>(hlog)};
        for (std::uint32_t i = 0; i < e; ++i) {
            std::vector<Fe> next(mp.size() + 1, sup_->zero());
            for (std::size_t c = 0; c < mp.size(); ++c) {
                next[c + 1] = sup_->add(next[c + 1], mp[c]);
                next[c] = sup_->add(next[c], sup_->mul(mp[c], sup_->neg(conj)));
            }
            mp = std::move(next);
            conj = sup_->pow(conj, p);
        }
        bool match = true;
        for (std::uint32_t c = 0; c <= e && match; ++c) {
            std::uint32_t enc = sup_->encoding(mp[c]);
            match = enc < p && enc == want[c] % p;
        }
        if (match) {
            gen_image_log_ = hlog;
            proj_mult_ = modinv_u64(hlog / stride_ % subg, subg);
            return;
        }
    }
    throw InternalError(fe_err("no canonical generator image found for embedding"));
}

Fe Embedding::embed(Fe x) const {
    sub_->check(x);
    if (x.is_zero()) return x;
    if (sub_->group_order() == 1) return sup_->one();
    return Fe{static_cast<std::int64_t>(static_cast<std::uint64_t>(x.log) * gen_image_log_ %
                                        sup_->group_order())};
}

bool Embedding::in_image(Fe x) const {
    sup_->check(x);
    return x.is_zero() || static_cast<std::uint64_t>(x.log) % stride_ == 0;
}

Fe Embedding::project(Fe x) const {
    sup_->check(x);
    if (x.is_zero()) return x;
    if (static_cast<std::uint64_t>(x.log) % stride_ != 0)
        throw DomainError(fe_err("coefficient not in base field"));
    if (sub_->group_order() == 1) return sub_->one();
    std::uint64_t a = static_cast<std::uint64_t>(x.log) / stride_ * proj_mult_ % sub_->group_order();
    return Fe{static_cast<std::int64_t>(a)};
}

} // namespace ccw
