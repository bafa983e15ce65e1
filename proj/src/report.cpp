#include "ccw/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace ccw {

namespace {

Json big_json(const BigUint& v) {
    if (v.fits_u64()) return Json(v.as_u64());
    return Json(v.str());
}

Json fe_json(const FieldTable& f, Fe x) {
    Json j;
    j["log"] = x.is_zero() ? Json(nullptr) : Json(x.log);
    std::ostringstream poly;
    std::uint32_t enc = f.encoding(x);
    if (f.degree() == 1) {
        poly << enc;
    } else {
        bool first = true;
        std::uint32_t p = f.characteristic();
        for (std::uint32_t i = 0; enc != 0; ++i, enc /= p) {
            std::uint32_t digit = enc % p;
            if (digit == 0) continue;
            if (!first) poly << "+";
            first = false;
            if (i == 0 || digit != 1) poly << digit;
            if (i == 0) continue;
            if (digit != 1) poly << "*";
            poly << "y";
            if (i > 1) poly << "^" << i;
        }
        if (first) poly << 0;
    }
    j["poly"] = poly.str();
    return j;
}

Json poly_json(const FieldTable& f, const Poly& p) {
    Json arr = Json::array();
    for (Fe c : p.coeffs()) arr.push_back(fe_json(f, c));
    return arr;
}

Json request_json(const AnalysisRequest& req) {
    Json j;
    j["p"] = req.p;
    j["e"] = req.e;
    j["n"] = req.n;
    j["lambda"] = req.lambda;
    if (req.all_cosets) {
        j["cosets"] = "all";
    } else {
        j["cosets"] = req.cosets;
    }
    j["weights"] = req.with_weights;
    j["oracle"] = req.with_oracle;
    j["enum_cap"] = req.enum_cap;
    j["oracle_cap"] = req.oracle_cap;
    return j;
}

std::vector<std::uint64_t> resolve_labels(const AnalysisRequest& req, const CosetSystem& system) {
    std::vector<std::uint64_t> alphas;
    if (req.all_cosets) {
        for (const Coset& c : system.cosets) alphas.push_back(c.alpha);
        return alphas;
    }
    for (std::uint64_t rep : req.cosets) alphas.push_back(coset_of(rep, system).alpha);
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return alphas;
}

} // namespace

LambdaSpec parse_lambda(const std::string& text) {
    if (text.empty()) throw ValidationError("cli: empty lambda");
    if (text[0] == 'g') {
        if (text.size() == 1) return LambdaSpec::gen_power(1);
        if (text[1] != '^') throw ValidationError("cli: lambda must be an integer or g^a");
        try {
            return LambdaSpec::gen_power(std::stoll(text.substr(2)));
        } catch (const std::exception&) {
            throw ValidationError("cli: cannot parse lambda exponent in '" + text + "'");
        }
    }
    try {
        std::size_t used = 0;
        std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return LambdaSpec::value(v);
    } catch (const std::exception&) {
        throw ValidationError("cli: cannot parse lambda '" + text + "'");
    }
}

AnalysisRequest request_from_json(const Json& j) {
    AnalysisRequest req;
    req.p = j.at("p").get<std::uint32_t>();
    req.e = j.at("e").get<std::uint32_t>();
    req.n = j.at("n").get<std::uint64_t>();
    req.lambda = j.at("lambda").get<std::string>();
    if (j.at("cosets").is_string()) {
        req.all_cosets = true;
    } else {
        req.cosets = j.at("cosets").get<std::vector<std::uint64_t>>();
    }
    req.with_weights = j.at("weights").get<bool>();
    req.with_oracle = j.at("oracle").get<bool>();
    req.enum_cap = j.at("enum_cap").get<std::uint64_t>();
    req.oracle_cap = j.at("oracle_cap").get<std::uint64_t>();
    return req;
}

Json run_analysis(const AnalysisRequest& req) {
    auto start = std::chrono::steady_clock::now();

    ZetaContext ctx = build_context(req.p, req.e, req.n, parse_lambda(req.lambda));
    std::vector<std::uint64_t> alphas = resolve_labels(req, *ctx.system);
    Code code = build_code(ctx, alphas);

    OrbitReport orbit;
    if (req.with_weights || req.with_oracle) {
        ReportOptions ropt;
        ropt.enum_cap = req.enum_cap;
        ropt.oracle_cap = req.oracle_cap;
        ropt.with_oracle = req.with_oracle;
        orbit = tightness_report(code, ropt);
    } else {
        orbit = bounds_report(code);
    }

    const FieldTable& base = *ctx.params.field;
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["request"] = request_json(req);

    Json jctx;
    jctx["q"] = ctx.q();
    jctx["p"] = req.p;
    jctx["e"] = req.e;
    jctx["t"] = ctx.t();
    jctx["m"] = ctx.m;
    jctx["tn"] = ctx.tn();
    jctx["lambda"] = fe_json(base, ctx.params.lambda);
    jctx["zeta_log"] = ctx.zeta.log;
    jctx["zeta_unit"] = ctx.zeta_unit;
    jctx["zeta_choices"] = ctx.zeta_choice_count;
    doc["context"] = jctx;

    Json jcos = Json::array();
    for (const Coset& c : ctx.system->cosets) {
        Json one;
        one["alpha"] = c.alpha;
        one["rep"] = c.rep;
        one["size"] = c.size();
        one["members"] = c.members;
        one["selected"] =
            std::binary_search(code.spec.alphas.begin(), code.spec.alphas.end(), c.alpha);
        jcos.push_back(std::move(one));
    }
    doc["cosets"] = jcos;

    Json jcode;
    jcode["length"] = code.n();
    jcode["dimension"] = code.dimension;
    jcode["generator"] = poly_json(base, code.generator);
    jcode["check"] = poly_json(base, code.check);
    doc["code"] = jcode;

    Json jbounds;
    jbounds["n_rho"] = big_json(orbit.n_rho);
    jbounds["n_rho_m"] = big_json(orbit.n_rho_m);
    Json terms = Json::array();
    for (const PerSubsetTerm& term : orbit.per_subset_terms) {
        Json t;
        t["components"] = term.alphas;
        t["n_rho"] = big_json(term.n_rho);
        t["n_rho_m"] = big_json(term.n_rho_m);
        t["delta"] = Json{{"num", term.delta.num}, {"den", term.delta.den}};
        t["prop2"] = term.prop2;
        terms.push_back(std::move(t));
    }
    jbounds["per_subset"] = terms;
    jbounds["delta_all_one"] = orbit.delta_all_one;
    jbounds["prop2_overall"] = orbit.prop2_overall;
    doc["bounds"] = jbounds;

    if (orbit.weights) {
        Json jw;
        Json dist = Json::array();
        for (std::size_t w = 0; w < orbit.weights->counts.size(); ++w)
            if (orbit.weights->counts[w] != 0)
                dist.push_back(Json::array({w, orbit.weights->counts[w]}));
        jw["distribution"] = dist;
        jw["distinct_nonzero"] = *orbit.distinct_weights;
        doc["weights"] = jw;
    } else {
        doc["weights"] = nullptr;
    }

    if (orbit.distinct_weights) {
        Json jt;
        jt["distinct_weights"] = *orbit.distinct_weights;
        jt["tight_rho"] = *orbit.tight_rho;
        jt["tight_rho_m"] = *orbit.tight_rho_m;
        if (orbit.orbitwise_tight_rho) {
            jt["orbitwise_tight_rho"] = *orbit.orbitwise_tight_rho;
            jt["orbitwise_tight_rho_m"] = *orbit.orbitwise_tight_rho_m;
        }
        doc["tightness"] = jt;
    } else {
        doc["tightness"] = nullptr;
    }

    if (req.with_oracle) {
        Json jo;
        jo["rho"] = *orbit.oracle_rho;
        jo["rho_m"] = *orbit.oracle_rho_m;
        jo["matches_formulas"] = true;  // tightness_report throws otherwise
        doc["oracle"] = jo;
    } else {
        doc["oracle"] = nullptr;
    }

    if (orbit.distinct_weights) {
        Json jd;
        std::uint64_t theta = *orbit.distinct_weights;
        jd["theta"] = theta;
        jd["bound"] = big_json(delsarte_bound(code.n(), code.q(), theta));
        jd["size"] = big_json(BigUint::pow(code.q(), code.dimension));
        jd["holds"] = delsarte_upper_check(code.q(), code.dimension, code.n(), theta);
        doc["delsarte"] = jd;
    } else {
        doc["delsarte"] = nullptr;
    }

    auto elapsed = std::chrono::steady_clock::now() - start;
    doc["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    return doc;
}

Json coset_listing(std::uint32_t p, std::uint32_t e, std::uint64_t n, const std::string& lambda) {
    CodeParams pr = make_code_params(p, e, n, parse_lambda(lambda));
    auto system = cosets_in_S(pr.q(), n, pr.t);
    Json doc;
    doc["schema"] = kSchemaVersion;
    doc["q"] = pr.q();
    doc["n"] = n;
    doc["t"] = pr.t;
    doc["tn"] = pr.tn();
    Json arr = Json::array();
    for (const Coset& c : system->cosets) {
        Json one;
        one["alpha"] = c.alpha;
        one["rep"] = c.rep;
        one["size"] = c.size();
        one["members"] = c.members;
        arr.push_back(std::move(one));
    }
    doc["cosets"] = arr;
    return doc;
}

std::string weights_csv(const WeightDistribution& dist) {
    std::ostringstream os;
    os << "weight,count\n";
    for (std::size_t w = 0; w < dist.counts.size(); ++w)
        if (dist.counts[w] != 0) os << w << "," << dist.counts[w] << "\n";
    return os.str();
}

std::vector<SearchRecord> run_search(std::uint32_t p, std::uint32_t e, std::uint64_t n,
                                     const std::string& lambda, const SearchOptions& opt) {
    CodeParams pr = make_code_params(p, e, n, parse_lambda(lambda));
    auto system = cosets_in_S(pr.q(), n, pr.t);
    std::size_t s = system->cosets.size();

    std::vector<SearchRecord> out;
    std::vector<std::uint64_t> pick;
    std::uint64_t emitted = 0;

    // enumerate subsets of size 1..max_components in lexicographic label order
    auto analyze_pick = [&]() {
        if (++emitted > opt.max_subsets)
            throw ResourceError("search: subset budget " + std::to_string(opt.max_subsets) +
                                " exceeded; raise --max-subsets");
        SearchRecord rec;
        auto comps = component_params(*system, pick);
        std::uint64_t k = 0;
        for (const auto& c : comps) {
            rec.alphas.push_back(c.alpha);
            rec.reps.push_back(c.rep);
            k += c.size;
        }
        rec.dimension = k;
        rec.n_rho = n_rho_total(comps, pr.q(), pr.t, n);
        rec.n_rho_m = n_rho_m_total(comps, pr.q(), pr.t, n);
        if (checked_pow_u64(pr.q(), k, opt.enum_cap) > opt.enum_cap) {
            rec.skipped = true;
            return rec;
        }
        Code code = build_code_small_fields(pr, system, pick);
        WeightDistribution dist = weight_distribution(code, EnumOptions{opt.enum_cap, 0, 4096});
        rec.distinct_weights = dist.distinct_nonzero();
        rec.tight_rho = rec.n_rho == BigUint(*rec.distinct_weights);
        rec.tight_rho_m = rec.n_rho_m == BigUint(*rec.distinct_weights);
        return rec;
    };

    std::function<void(std::size_t)> grow = [&](std::size_t next) {
        if (!pick.empty()) {
            SearchRecord rec = analyze_pick();
            bool keep = !rec.skipped;
            if (keep) out.push_back(std::move(rec));
        }
        if (pick.size() == opt.max_components) return;
        for (std::size_t i = next; i < s; ++i) {
            pick.push_back(system->cosets[i].alpha);
            grow(i + 1);
            pick.pop_back();
        }
    };
    grow(0);
    return out;
}

std::string search_csv(const std::vector<SearchRecord>& records) {
    std::ostringstream os;
    os << "cosets,k,n_rho,n_rho_m,distinct_weights,tight_rho,tight_rho_m\n";
    for (const SearchRecord& r : records) {
        for (std::size_t i = 0; i < r.reps.size(); ++i) os << (i ? "+" : "") << r.reps[i];
        os << "," << r.dimension << "," << r.n_rho.str() << "," << r.n_rho_m.str() << ",";
        if (r.distinct_weights) os << *r.distinct_weights;
        os << "," << (r.tight_rho ? 1 : 0) << "," << (r.tight_rho_m ? 1 : 0) << "\n";
    }
    return os.str();
}

Json search_json(const std::vector<SearchRecord>& records) {
    Json arr = Json::array();
    for (const SearchRecord& r : records) {
        Json one;
        one["components"] = r.alphas;
        one["reps"] = r.reps;
        one["k"] = r.dimension;
        one["n_rho"] = big_json(r.n_rho);
        one["n_rho_m"] = big_json(r.n_rho_m);
        one["distinct_weights"] = r.distinct_weights ? Json(*r.distinct_weights) : Json(nullptr);
        one["tight_rho"] = r.tight_rho;
        one["tight_rho_m"] = r.tight_rho_m;
        arr.push_back(std::move(one));
    }
    return arr;
}

std::vector<ReproduceRow> run_reproduce(bool tamper) {
    struct Expected {
        const char* name;
        AnalysisRequest req;
        std::uint64_t n_rho, n_rho_m;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> dist;
        bool tight_rho, tight_rho_m;
    };
    std::vector<Expected> table;
    table.push_back({"q=5 n=18 lambda=4 cosets {3,15}",
                     {5, 1, 18, "4", {3}, false, true, false},
                     2,
                     2,
                     {{0, 1}, {12, 12}, {18, 12}},
                     true,
                     true});
    table.push_back({"q=3 n=65 lambda=2 cosets {65}+{5,15,45}",
                     {3, 1, 65, "2", {65, 5}, false, true, false},
                     4,
                     4,
                     {{0, 1}, {35, 26}, {45, 26}, {50, 26}, {65, 2}},
                     true,
                     true});
    table.push_back({"q=7 n=32 lambda=2 coset {10,70}",
                     {7, 1, 32, "2", {10}, false, true, false},
                     1,
                     1,
                     {{0, 1}, {28, 48}},
                     true,
                     true});
    table.push_back({"q=3 n=91 lambda=2 cosets {91}+{7,21,63}",
                     {3, 1, 91, "2", {91, 7}, false, true, false},
                     4,
                     4,
                     {{0, 1}, {49, 26}, {63, 26}, {70, 26}, {91, 2}},
                     true,
                     true});
    if (tamper) table[0].n_rho = 3;

    std::vector<ReproduceRow> rows;
    for (const Expected& ex : table) {
        ReproduceRow row;
        row.name = ex.name;
        try {
            Json doc = run_analysis(ex.req);
            std::ostringstream detail;
            bool ok = true;
            auto expect = [&](const std::string& what, const Json& got, const Json& want) {
                if (got != want) {
                    ok = false;
                    detail << what << ": expected " << want.dump() << ", got " << got.dump() << "; ";
                }
            };
            expect("n_rho", doc["bounds"]["n_rho"], Json(ex.n_rho));
            expect("n_rho_m", doc["bounds"]["n_rho_m"], Json(ex.n_rho_m));
            Json want_dist = Json::array();
            for (auto [w, c] : ex.dist) want_dist.push_back(Json::array({w, c}));
            expect("weights", doc["weights"]["distribution"], want_dist);
            expect("tight_rho", doc["tightness"]["tight_rho"], Json(ex.tight_rho));
            expect("tight_rho_m", doc["tightness"]["tight_rho_m"], Json(ex.tight_rho_m));
            row.pass = ok;
            row.detail = ok ? "ok" : detail.str();
        } catch (const std::exception& exn) {
            row.pass = false;
            row.detail = std::string("exception: ") + exn.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace ccw
