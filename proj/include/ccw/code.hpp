#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ccw/cyclotomic.hpp"
#include "ccw/gf.hpp"
#include "ccw/poly.hpp"

namespace ccw {

/// lambda given either as a prime-field integer (e = 1 only) or as a power of
/// the canonical primitive element of F_q.
struct LambdaSpec {
    enum class Kind { Value, GeneratorPower };
    Kind kind = Kind::Value;
    std::int64_t v = 1;

    static LambdaSpec value(std::int64_t v) { return {Kind::Value, v}; }
    static LambdaSpec gen_power(std::int64_t a) { return {Kind::GeneratorPower, a}; }
};

/// Ambient data every code-level operation needs: the base field, lambda and
/// its order, and the length.
struct CodeParams {
    FieldPtr field;
    Fe lambda;
    std::uint64_t n = 0;
    std::uint64_t t = 0;

    std::uint64_t q() const { return field->order(); }
    std::uint64_t tn() const { return t * n; }
};

CodeParams make_code_params(std::uint32_t p, std::uint32_t e, std::uint64_t n, LambdaSpec lambda,
                            std::uint64_t table_cap = kDefaultTableCap);

struct ContextOptions {
    std::uint64_t table_cap = kDefaultTableCap;
    /// Which admissible zeta to take, in increasing order of the unit u
    /// (test hook; 0 is the canonical choice).
    std::uint32_t zeta_choice = 0;
};

/// Full ambient setup: F_q, the splitting field F_{q^m}, and a deterministic
/// primitive tn-th root of unity zeta with zeta^n = lambda.
struct ZetaContext {
    CodeParams params;
    FieldPtr ext;
    Embedding emb;  // F_q -> F_{q^m}
    std::uint64_t m = 0;
    Fe zeta;
    std::uint64_t zeta_unit = 0;        // the winning unit u
    std::uint32_t zeta_choice = 0;      // index of the choice taken
    std::uint32_t zeta_choice_count = 0;
    std::shared_ptr<const CosetSystem> system;

    std::uint64_t q() const { return params.q(); }
    std::uint64_t n() const { return params.n; }
    std::uint64_t t() const { return params.t; }
    std::uint64_t tn() const { return params.tn(); }
};

ZetaContext build_context(std::uint32_t p, std::uint32_t e, std::uint64_t n, LambdaSpec lambda,
                          const ContextOptions& opt = {});

/// Minimal polynomial of the coset: prod over members j of (x - zeta^j),
/// coefficients projected to F_q.
Poly min_poly(const Coset& coset, const ZetaContext& ctx);

/// Generating idempotent of the minimal ideal whose check polynomial is the
/// coset's minimal polynomial; a polynomial over F_q.
Poly primitive_idempotent(const Coset& coset, const ZetaContext& ctx);

/// The rank-one idempotent of F_{q^m}[x]/(x^n - lambda) attached to one member
/// of S; a polynomial over F_{q^m}.
Poly fine_idempotent(std::uint64_t member, const ZetaContext& ctx);

/// A coset selection on the check-polynomial side.
struct CodeSpec {
    CodeParams params;
    std::shared_ptr<const CosetSystem> system;
    std::vector<std::uint64_t> alphas;  // sorted coset labels
};

struct Code {
    CodeSpec spec;
    Poly generator;  // monic, degree n - k
    Poly check;      // monic, degree k
    std::uint64_t dimension = 0;
    /// k x n generator-matrix rows as field encodings (row j = x^j * generator).
    std::vector<std::vector<std::uint16_t>> rows;

    std::uint64_t q() const { return spec.params.q(); }
    std::uint64_t n() const { return spec.params.n; }
    std::uint64_t t() const { return spec.params.t; }
};

Code build_code(const ZetaContext& ctx, std::vector<std::uint64_t> alphas);

/// Per-coset root assignments that avoid the full splitting field: cosets with
/// equal G = gcd(rep, tn) share one field F_{q^d} and one base root psi with
/// ord(psi) = tn/G and psi^n = lambda^G; the coset with rep = G*r gets psi^r.
/// Any such psi extends to a full admissible root labeling, so every produced
/// minimal polynomial is a genuine irreducible factor of x^n - lambda and
/// same-class cosets get distinct factors. Choices are only consistent within
/// a class, which is exactly what the factorization and idempotent identities
/// need; code construction, whose orbit structure depends on relative root
/// choices across cosets, goes through build_code_small_fields instead.
class RootPlan {
public:
    RootPlan(CodeParams params, std::shared_ptr<const CosetSystem> system,
             std::uint64_t table_cap = kDefaultTableCap);

    /// False when F_{q^{d}} for the coset's class exceeds the table cap.
    bool constructible(std::uint64_t alpha);
    Poly coset_min_poly(std::uint64_t alpha);
    Poly coset_idempotent(std::uint64_t alpha);

    const CodeParams& params() const { return params_; }
    const CosetSystem& system() const { return *system_; }

private:
    struct ClassData {
        bool ok = false;
        FieldPtr field;
        std::optional<Embedding> emb;
        Fe psi;
    };
    ClassData& class_for(std::uint64_t alpha);

    CodeParams params_;
    std::shared_ptr<const CosetSystem> system_;
    std::uint64_t table_cap_;
    std::map<std::uint64_t, ClassData> classes_;  // keyed by G
};

/// Code construction without the full splitting field F_{q^m}: all selected
/// roots are taken as powers of one element of order tn/gcd(rep_i..., tn) in
/// F_{q^{lcm d_i}}, which keeps the root choices of different cosets globally
/// consistent (they extend to a single admissible zeta). The result is the
/// code of the given labels under some admissible zeta, hence monomially
/// equivalent to build_code's output for the same labels.
Code build_code_small_fields(const CodeParams& params, std::shared_ptr<const CosetSystem> system,
                             std::vector<std::uint64_t> alphas,
                             std::uint64_t table_cap = kDefaultTableCap);

/// rho(c) = (lambda*c_{n-1}, c_0, ..., c_{n-2}) on raw encoding vectors.
std::vector<std::uint16_t> consta_shift(std::span<const std::uint16_t> c, const CodeParams& params);

/// sigma_b(c): coordinatewise multiplication by a nonzero scalar.
std::vector<std::uint16_t> scalar_mul(Fe b, std::span<const std::uint16_t> c, const FieldTable& f);

/// Codeword of the polynomial: encoding vector of length n.
std::vector<std::uint16_t> poly_to_word(const Poly& p, std::uint64_t n);
Poly word_to_poly(FieldPtr f, std::span<const std::uint16_t> word);

std::uint64_t hamming_weight(std::span<const std::uint16_t> word);

} // namespace ccw
