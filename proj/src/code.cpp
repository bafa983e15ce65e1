#include "ccw/code.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ccw {

namespace {

std::string cc_err(const std::string& what) { return "code: " + what; }

std::vector<std::uint64_t> canonical_labels(const CosetSystem& system,
                                            std::vector<std::uint64_t> alphas) {
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    for (std::uint64_t a : alphas) {
        const Coset& c = system.by_alpha(a);
        if (c.alpha != a)
            throw ValidationError(cc_err("label " + std::to_string(a) +
                                         " is not a canonical coset label (use alpha " +
                                         std::to_string(c.alpha) + ")"));
    }
    return alphas;
}

Code assemble_code(CodeSpec spec, Poly check) {
    const CodeParams& pr = spec.params;
    Poly ambient = Poly::consta_modulus(pr.field, pr.n, pr.lambda);
    auto [generator, rem] = ambient.divmod(check);
    internal_check(rem.is_zero(), cc_err("check polynomial does not divide x^n - lambda"));

    Code code;
    code.dimension = static_cast<std::uint64_t>(check.degree());
    code.generator = std::move(generator);
    code.check = std::move(check);
    code.spec = std::move(spec);

    internal_check(code.generator.is_monic() && code.check.is_monic(),
                   cc_err("generator/check must be monic"));

    std::uint64_t n = pr.n, k = code.dimension;
    std::vector<std::uint16_t> g = poly_to_word(code.generator, n);
    code.rows.assign(k, std::vector<std::uint16_t>(n, 0));
    for (std::uint64_t j = 0; j < k; ++j)
        for (std::uint64_t i = 0; i + j < n; ++i) code.rows[j][i + j] = g[i];
    return code;
}

} // namespace

CodeParams make_code_params(std::uint32_t p, std::uint32_t e, std::uint64_t n, LambdaSpec lambda,
                            std::uint64_t table_cap) {
    if (n < 1) throw ValidationError(cc_err("length must be >= 1"));
    FieldPtr base = field(p, e, table_cap);
    if (base->order() > 0x10000)
        throw ResourceError(cc_err("base field order > 2^16 is unsupported for codes"));
    if (std::gcd(n, base->order()) != 1)
        throw ValidationError(cc_err("repeated-root case unsupported: gcd(n, q) != 1"));

    Fe lam;
    switch (lambda.kind) {
        case LambdaSpec::Kind::Value:
            if (e != 1)
                throw ValidationError(cc_err("bare integer lambda requires e = 1; use g^a"));
            lam = base->from_int(lambda.v);
            break;
        case LambdaSpec::Kind::GeneratorPower:
            lam = base->pow(base->generator(), lambda.v);
            break;
    }
    if (lam.is_zero()) throw ValidationError(cc_err("lambda must be nonzero"));

    CodeParams pr;
    pr.field = std::move(base);
    pr.lambda = lam;
    pr.n = n;
    pr.t = pr.field->element_order(lam);
    return pr;
}

ZetaContext build_context(std::uint32_t p, std::uint32_t e, std::uint64_t n, LambdaSpec lambda,
                          const ContextOptions& opt) {
    CodeParams pr = make_code_params(p, e, n, lambda, opt.table_cap);
    std::uint64_t q = pr.q(), T = pr.tn();
    std::uint64_t m = mult_order(q, T);

    std::uint64_t ext_order = checked_pow_u64(q, m, opt.table_cap);
    if (ext_order > opt.table_cap)
        throw ResourceError(cc_err("splitting field q^m = " + std::to_string(q) + "^" +
                                   std::to_string(m) + " exceeds the table cap " +
                                   std::to_string(opt.table_cap)));
    FieldPtr ext = field(p, e * m, opt.table_cap);
    Embedding emb(pr.field, ext);

    // zeta candidates: omega^{u (q^m-1)/tn} over units u of Z_tn, smallest u
    // with zeta^n = lambda wins.
    std::uint64_t stride = ext->group_order() / T;
    Fe lambda_up = emb.embed(pr.lambda);
    std::vector<std::uint64_t> winners;
    for (std::uint64_t u = 1; u <= T; ++u) {
        if (std::gcd(u, T) != 1) continue;
        Fe zeta{static_cast<std::int64_t>(u % T * stride % ext->group_order())};
        if (ext->pow(zeta, static_cast<std::int64_t>(n)) == lambda_up) winners.push_back(u);
    }
    internal_check(!winners.empty(), cc_err("no admissible zeta found"));
    if (opt.zeta_choice >= winners.size())
        throw ValidationError(cc_err("zeta choice index " + std::to_string(opt.zeta_choice) +
                                     " out of range; " + std::to_string(winners.size()) +
                                     " admissible choices"));

    auto system = cosets_in_S(q, n, pr.t);
    std::uint64_t unit = winners[opt.zeta_choice];
    Fe zeta{static_cast<std::int64_t>(unit % T * stride % ext->group_order())};
    internal_check(ext->element_order(zeta) == T, cc_err("zeta does not have order tn"));
    return ZetaContext{std::move(pr),
                       ext,
                       std::move(emb),
                       m,
                       zeta,
                       unit,
                       opt.zeta_choice,
                       static_cast<std::uint32_t>(winners.size()),
                       std::move(system)};
}

Poly min_poly(const Coset& coset, const ZetaContext& ctx) {
    const FieldPtr& ext = ctx.ext;
    Poly prod = Poly::one(ext);
    for (std::uint64_t j : coset.members) {
        Fe root = ext->pow(ctx.zeta, static_cast<std::int64_t>(j));
        prod = prod * Poly(ext, {ext->neg(root), ext->one()});
    }
    std::vector<Fe> down(prod.coeffs().size());
    for (std::size_t i = 0; i < down.size(); ++i) {
        try {
            down[i] = ctx.emb.project(prod.coeff(i));
        } catch (const DomainError& ex) {
            throw InternalError(cc_err(std::string("minimal polynomial coefficient escaped F_q: ") +
                                       ex.what()));
        }
    }
    return Poly(ctx.params.field, std::move(down));
}

Poly primitive_idempotent(const Coset& coset, const ZetaContext& ctx) {
    const FieldPtr& ext = ctx.ext;
    std::uint64_t n = ctx.n();
    Fe inv_n = ext->inv(ext->from_int(static_cast<std::int64_t>(n)));
    std::vector<Fe> coeffs(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        Fe sum{};
        for (std::uint64_t h : coset.members)
            sum = ext->add(sum, ext->pow(ctx.zeta, -static_cast<std::int64_t>(v * h)));
        Fe c = ext->mul(inv_n, sum);
        try {
            coeffs[v] = ctx.emb.project(c);
        } catch (const DomainError& ex) {
            throw InternalError(cc_err(std::string("idempotent coefficient escaped F_q: ") + ex.what()));
        }
    }
    return Poly(ctx.params.field, std::move(coeffs));
}

Poly fine_idempotent(std::uint64_t member, const ZetaContext& ctx) {
    std::uint64_t T = ctx.tn();
    member %= T;
    ctx.system->alpha_of_member(member);  // validates membership in S
    const FieldPtr& ext = ctx.ext;
    std::uint64_t n = ctx.n();
    Fe inv_n = ext->inv(ext->from_int(static_cast<std::int64_t>(n)));
    std::vector<Fe> coeffs(n);
    for (std::uint64_t v = 0; v < n; ++v)
        coeffs[v] = ext->mul(inv_n, ext->pow(ctx.zeta, -static_cast<std::int64_t>(v * member)));
    return Poly(ext, std::move(coeffs));
}

Code build_code(const ZetaContext& ctx, std::vector<std::uint64_t> alphas) {
    alphas = canonical_labels(*ctx.system, std::move(alphas));
    if (alphas.empty()) throw ValidationError(cc_err("empty component list (zero code)"));
    Poly check = Poly::one(ctx.params.field);
    for (std::uint64_t a : alphas) check = check * min_poly(ctx.system->by_alpha(a), ctx);
    return assemble_code(CodeSpec{ctx.params, ctx.system, std::move(alphas)}, std::move(check));
}

RootPlan::RootPlan(CodeParams params, std::shared_ptr<const CosetSystem> system,
                   std::uint64_t table_cap)
    : params_(std::move(params)), system_(std::move(system)), table_cap_(table_cap) {}

RootPlan::ClassData& RootPlan::class_for(std::uint64_t alpha) {
    const Coset& coset = system_->by_alpha(alpha);
    std::uint64_t T = system_->tn();
    std::uint64_t G = std::gcd(coset.rep, T);
    auto it = classes_.find(G);
    if (it != classes_.end()) return it->second;

    ClassData data;
    std::uint64_t o = T / G;
    std::uint64_t d = coset.size();
    internal_check(d == mult_order(params_.q(), o), cc_err("coset size does not match its class order"));
    std::uint32_t p = params_.field->characteristic();
    std::uint32_t e = params_.field->degree();
    std::uint64_t q_d = checked_pow_u64(params_.q(), d, table_cap_);
    if (q_d > table_cap_) {
        classes_.emplace(G, std::move(data));
        return classes_.find(G)->second;
    }

    data.field = field(p, e * static_cast<std::uint32_t>(d), table_cap_);
    data.emb.emplace(params_.field, data.field);
    std::uint64_t group = data.field->group_order();
    internal_check(group % o == 0, cc_err("class order does not divide q^d - 1"));
    std::uint64_t stride = group / o;

    Fe target = data.emb->embed(params_.field->pow(params_.lambda, static_cast<std::int64_t>(G)));
    for (std::uint64_t j = 1; j <= o; ++j) {
        if (std::gcd(j, o) != 1) continue;
        Fe psi{static_cast<std::int64_t>(stride * (j % o) % group)};
        if (data.field->pow(psi, static_cast<std::int64_t>(params_.n)) == target) {
            data.psi = psi;
            data.ok = true;
            break;
        }
    }
    internal_check(data.ok, cc_err("no admissible class root found"));
    classes_.emplace(G, std::move(data));
    return classes_.find(G)->second;
}

bool RootPlan::constructible(std::uint64_t alpha) { return class_for(alpha).ok; }

Poly RootPlan::coset_min_poly(std::uint64_t alpha) {
    const Coset& coset = system_->by_alpha(alpha);
    ClassData& cls = class_for(alpha);
    internal_check(cls.ok, cc_err("coset class field exceeds the table cap"));
    std::uint64_t T = system_->tn();
    std::uint64_t G = std::gcd(coset.rep, T);
    std::uint64_t r = coset.rep / G;
    const FieldPtr& f = cls.field;

    Fe eta = f->pow(cls.psi, static_cast<std::int64_t>(r));
    Poly prod = Poly::one(f);
    Fe conj = eta;
    for (std::uint64_t u = 0; u < coset.size(); ++u) {
        prod = prod * Poly(f, {f->neg(conj), f->one()});
        conj = f->pow(conj, static_cast<std::int64_t>(params_.q()));
    }
    internal_check(conj == eta, cc_err("Frobenius orbit size mismatch"));

    std::vector<Fe> down(prod.coeffs().size());
    for (std::size_t i = 0; i < down.size(); ++i) {
        try {
            down[i] = cls.emb->project(prod.coeff(i));
        } catch (const DomainError& ex) {
            throw InternalError(cc_err(std::string("small-field minimal polynomial escaped F_q: ") +
                                       ex.what()));
        }
    }
    return Poly(params_.field, std::move(down));
}

Poly RootPlan::coset_idempotent(std::uint64_t alpha) {
    const Coset& coset = system_->by_alpha(alpha);
    ClassData& cls = class_for(alpha);
    internal_check(cls.ok, cc_err("coset class field exceeds the table cap"));
    std::uint64_t T = system_->tn();
    std::uint64_t G = std::gcd(coset.rep, T);
    std::uint64_t r = coset.rep / G;
    const FieldPtr& f = cls.field;
    std::uint64_t n = params_.n;

    Fe eta = f->pow(cls.psi, static_cast<std::int64_t>(r));
    Fe inv_n = f->inv(f->from_int(static_cast<std::int64_t>(n)));
    std::vector<Fe> coeffs(n);
    for (std::uint64_t v = 0; v < n; ++v) {
        // sum over the coset of zeta^{-v h}, i.e. over the Frobenius orbit of eta^{-v}
        Fe base = f->pow(eta, -static_cast<std::int64_t>(v));
        Fe sum{};
        Fe conj = base;
        for (std::uint64_t u = 0; u < coset.size(); ++u) {
            sum = f->add(sum, conj);
            conj = f->pow(conj, static_cast<std::int64_t>(params_.q()));
        }
        try {
            coeffs[v] = cls.emb->project(f->mul(inv_n, sum));
        } catch (const DomainError& ex) {
            throw InternalError(cc_err(std::string("small-field idempotent escaped F_q: ") + ex.what()));
        }
    }
    return Poly(params_.field, std::move(coeffs));
}

Code build_code_small_fields(const CodeParams& params, std::shared_ptr<const CosetSystem> system,
                             std::vector<std::uint64_t> alphas, std::uint64_t table_cap) {
    alphas = canonical_labels(*system, std::move(alphas));
    if (alphas.empty()) throw ValidationError(cc_err("empty component list (zero code)"));

    // One root psi with ord(psi) = tn/G0 and psi^n = lambda^{G0}, where G0 is
    // the gcd of gcd(rep_i, tn) over the selected cosets, extends to a single
    // admissible zeta with zeta^{rep_i} = psi^{rep_i/G0} for every component.
    // All selected roots are therefore powers of psi, and they live in
    // F_{q^{d0}} with d0 = lcm of the selected coset sizes.
    std::uint64_t T = system->tn(), q = params.q(), n = params.n;
    std::uint64_t G0 = 0, d0 = 1;
    for (std::uint64_t a : alphas) {
        const Coset& c = system->by_alpha(a);
        G0 = std::gcd(G0, std::gcd(c.rep, T));
        d0 = std::lcm(d0, c.size());
    }
    std::uint64_t o0 = T / G0;
    internal_check(d0 == mult_order(q, o0), cc_err("joint root order mismatch"));
    if (checked_pow_u64(q, d0, table_cap) > table_cap)
        throw ResourceError(cc_err("joint splitting field q^" + std::to_string(d0) +
                                   " exceeds the table cap " + std::to_string(table_cap)));
    std::uint32_t p = params.field->characteristic();
    std::uint32_t e = params.field->degree();
    FieldPtr root_field = field(p, e * static_cast<std::uint32_t>(d0), table_cap);
    Embedding emb(params.field, root_field);

    std::uint64_t group = root_field->group_order();
    internal_check(group % o0 == 0, cc_err("joint root order does not divide the group order"));
    std::uint64_t stride = group / o0;
    Fe target = emb.embed(params.field->pow(params.lambda, static_cast<std::int64_t>(G0)));
    Fe psi{};
    bool found = false;
    for (std::uint64_t j = 1; j <= o0 && !found; ++j) {
        if (std::gcd(j, o0) != 1) continue;
        Fe cand{static_cast<std::int64_t>(stride * (j % o0) % group)};
        if (root_field->pow(cand, static_cast<std::int64_t>(n)) == target) {
            psi = cand;
            found = true;
        }
    }
    internal_check(found, cc_err("no admissible joint root found"));

    std::vector<Poly> mins;
    mins.reserve(alphas.size());
    Poly check = Poly::one(params.field);
    for (std::uint64_t a : alphas) {
        const Coset& coset = system->by_alpha(a);
        Fe eta = root_field->pow(psi, static_cast<std::int64_t>(coset.rep / G0));
        Poly prod = Poly::one(root_field);
        Fe conj = eta;
        for (std::uint64_t u = 0; u < coset.size(); ++u) {
            prod = prod * Poly(root_field, {root_field->neg(conj), root_field->one()});
            conj = root_field->pow(conj, static_cast<std::int64_t>(q));
        }
        internal_check(conj == eta, cc_err("Frobenius orbit size mismatch"));
        std::vector<Fe> down(prod.coeffs().size());
        for (std::size_t i = 0; i < down.size(); ++i) {
            try {
                down[i] = emb.project(prod.coeff(i));
            } catch (const DomainError& ex) {
                throw InternalError(
                    cc_err(std::string("small-field minimal polynomial escaped F_q: ") + ex.what()));
            }
        }
        mins.emplace_back(params.field, std::move(down));
        check = check * mins.back();
    }
    for (std::size_t i = 0; i < mins.size(); ++i)
        for (std::size_t j = i + 1; j < mins.size(); ++j)
            internal_check(mins[i] != mins[j], cc_err("distinct cosets produced equal factors"));
    return assemble_code(CodeSpec{params, std::move(system), std::move(alphas)}, std::move(check));
}

std::vector<std::uint16_t> consta_shift(std::span<const std::uint16_t> c, const CodeParams& params) {
    if (c.size() != params.n)
        throw ValidationError(cc_err("codeword length " + std::to_string(c.size()) +
                                     " does not match n = " + std::to_string(params.n)));
    std::vector<std::uint16_t> out(c.size());
    const FieldTable& f = *params.field;
    Fe last = f.from_encoding(c.back());
    out[0] = static_cast<std::uint16_t>(f.encoding(f.mul(params.lambda, last)));
    for (std::size_t i = 1; i < c.size(); ++i) out[i] = c[i - 1];
    return out;
}

std::vector<std::uint16_t> scalar_mul(Fe b, std::span<const std::uint16_t> c, const FieldTable& f) {
    f.check(b);
    if (b.is_zero()) throw ValidationError(cc_err("scalar action requires b != 0"));
    std::vector<std::uint16_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = static_cast<std::uint16_t>(f.encoding(f.mul(b, f.from_encoding(c[i]))));
    return out;
}

std::vector<std::uint16_t> poly_to_word(const Poly& p, std::uint64_t n) {
    std::vector<Fe> c = p.padded(n);
    std::vector<std::uint16_t> out(n);
    for (std::uint64_t i = 0; i < n; ++i)
        out[i] = static_cast<std::uint16_t>(p.field()->encoding(c[i]));
    return out;
}

Poly word_to_poly(FieldPtr f, std::span<const std::uint16_t> word) {
    std::vector<Fe> c(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) c[i] = f->from_encoding(word[i]);
    return Poly(std::move(f), std::move(c));
}

std::uint64_t hamming_weight(std::span<const std::uint16_t> word) {
    std::uint64_t w = 0;
    for (std::uint16_t v : word) w += (v != 0);
    return w;
}

} // namespace ccw
