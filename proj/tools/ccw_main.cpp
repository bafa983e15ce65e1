// ccw: orbit-count upper bounds on the number of nonzero Hamming weights of
// simple-root constacyclic codes, with exhaustive verification.
//
// Subcommands: cosets, analyze, search, reproduce.
// Exit codes: 0 ok, 2 validation, 3 resource cap, 4 reproduction mismatch,
// 5 internal consistency (formula/oracle disagreement -- always a bug).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ccw/report.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;
constexpr int kExitInternal = 5;

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ccw::ValidationError("cli: cannot open output file " + path);
    out << body;
}

std::vector<std::uint64_t> parse_coset_list(const std::string& text, bool& all) {
    all = false;
    if (text == "all") {
        all = true;
        return {};
    }
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ccw::ValidationError("cli: cannot parse coset representative '" + item + "'");
        }
    }
    if (out.empty()) throw ccw::ValidationError("cli: empty coset list");
    return out;
}

void print_coset_listing(const ccw::Json& doc) {
    std::cout << "q=" << doc["q"] << " n=" << doc["n"] << " t=" << doc["t"] << " tn=" << doc["tn"]
              << "\n";
    for (const auto& c : doc["cosets"]) {
        std::cout << "alpha=" << c["alpha"] << " rep=" << c["rep"] << " size=" << c["size"]
                  << " members=";
        bool first = true;
        for (const auto& m : c["members"]) {
            std::cout << (first ? "" : ",") << m;
            first = false;
        }
        std::cout << "\n";
    }
}

void print_analysis_summary(const ccw::Json& doc) {
    const auto& ctx = doc["context"];
    std::cout << "q=" << ctx["q"] << " n=" << doc["request"]["n"] << " t=" << ctx["t"]
              << " m=" << ctx["m"] << " tn=" << ctx["tn"] << "\n";
    std::cout << "k=" << doc["code"]["dimension"] << "  n_rho=" << doc["bounds"]["n_rho"]
              << "  n_rho_m=" << doc["bounds"]["n_rho_m"] << "\n";
    if (!doc["weights"].is_null()) {
        std::cout << "weights:";
        for (const auto& pair : doc["weights"]["distribution"])
            std::cout << " " << pair[1] << "x^" << pair[0];
        std::cout << "  (distinct nonzero: " << doc["weights"]["distinct_nonzero"] << ")\n";
    }
    if (!doc["tightness"].is_null()) {
        std::cout << "tight_rho=" << doc["tightness"]["tight_rho"]
                  << " tight_rho_m=" << doc["tightness"]["tight_rho_m"] << "\n";
    }
    if (!doc["oracle"].is_null()) {
        std::cout << "oracle: rho=" << doc["oracle"]["rho"] << " rho_m=" << doc["oracle"]["rho_m"]
                  << " matches formulas\n";
    }
    std::cout << "timing_ms=" << doc["timing_ms"] << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"constacyclic code weight-count bounds via orbit counting"};
    app.require_subcommand(1);

    std::uint32_t p = 0, e = 1;
    std::uint64_t n = 0;
    std::string lambda = "1";
    std::string cosets_arg;
    bool with_weights = false, with_oracle = false;
    std::uint64_t enum_cap = ccw::kDefaultEnumCap;
    std::uint64_t oracle_cap = ccw::kDefaultOracleCap;
    std::string json_path, csv_path;
    std::uint64_t max_size = 1, max_subsets = 10000;
    bool tamper = false;

    auto add_field_flags = [&](CLI::App* cmd, bool need_cosets) {
        cmd->add_option("--p", p, "prime characteristic")->required();
        cmd->add_option("--e", e, "extension degree (q = p^e)")->capture_default_str();
        cmd->add_option("--n", n, "code length")->required();
        cmd->add_option("--lambda", lambda,
                        "constacyclic unit: integer (e=1) or g^a (power of the canonical "
                        "primitive element)")
            ->capture_default_str();
        if (need_cosets)
            cmd->add_option("--cosets", cosets_arg,
                            "comma-separated coset representatives (any member), or 'all'")
                ->required();
        cmd->add_option("--json", json_path, "write the JSON document to this path");
    };

    CLI::App* cosets_cmd = app.add_subcommand("cosets", "list the q-cyclotomic cosets in S");
    add_field_flags(cosets_cmd, false);

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "bounds and weight data for one code");
    add_field_flags(analyze_cmd, true);
    analyze_cmd->add_flag("--weights", with_weights, "enumerate the weight distribution");
    analyze_cmd->add_flag("--oracle", with_oracle,
                          "run the exhaustive orbit oracle and assert it matches the formulas");
    analyze_cmd->add_option("--enum-cap", enum_cap, "codeword enumeration cap")->capture_default_str();
    analyze_cmd->add_option("--oracle-cap", oracle_cap, "oracle enumeration cap")->capture_default_str();
    analyze_cmd->add_option("--csv", csv_path, "write the weight distribution as CSV");

    CLI::App* search_cmd =
        app.add_subcommand("search", "scan component subsets and flag tight codes");
    add_field_flags(search_cmd, false);
    search_cmd->add_option("--max-size", max_size, "largest subset size to scan")
        ->capture_default_str();
    search_cmd->add_option("--max-subsets", max_subsets, "subset budget")->capture_default_str();
    search_cmd->add_option("--enum-cap", enum_cap, "codeword enumeration cap")->capture_default_str();
    search_cmd->add_option("--csv", csv_path, "write the search summary as CSV");

    CLI::App* repro_cmd =
        app.add_subcommand("reproduce", "run the built-in example table and compare");
    repro_cmd->add_option("--json", json_path, "write the pass/fail table as JSON");
    repro_cmd->add_flag("--self-test-tamper", tamper, "corrupt one expected value (harness self-test)")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cosets_cmd->parsed()) {
            ccw::Json doc = ccw::coset_listing(p, e, n, lambda);
            if (!json_path.empty()) write_file(json_path, doc.dump(2) + "\n");
            print_coset_listing(doc);
            return 0;
        }

        if (analyze_cmd->parsed()) {
            ccw::AnalysisRequest req;
            req.p = p;
            req.e = e;
            req.n = n;
            req.lambda = lambda;
            req.cosets = parse_coset_list(cosets_arg, req.all_cosets);
            req.with_weights = with_weights;
            req.with_oracle = with_oracle;
            req.enum_cap = enum_cap;
            req.oracle_cap = oracle_cap;
            ccw::Json doc = ccw::run_analysis(req);
            if (!json_path.empty()) write_file(json_path, doc.dump(2) + "\n");
            if (!csv_path.empty() && !doc["weights"].is_null()) {
                std::ostringstream os;
                os << "weight,count\n";
                for (const auto& pair : doc["weights"]["distribution"])
                    os << pair[0] << "," << pair[1] << "\n";
                write_file(csv_path, os.str());
            }
            print_analysis_summary(doc);
            return 0;
        }

        if (search_cmd->parsed()) {
            ccw::SearchOptions opt;
            opt.max_components = max_size;
            opt.max_subsets = max_subsets;
            opt.enum_cap = enum_cap;
            auto records = ccw::run_search(p, e, n, lambda, opt);
            if (!json_path.empty()) write_file(json_path, ccw::search_json(records).dump(2) + "\n");
            if (!csv_path.empty()) write_file(csv_path, ccw::search_csv(records));
            std::uint64_t tight = 0;
            for (const auto& r : records) {
                for (std::size_t i = 0; i < r.reps.size(); ++i)
                    std::cout << (i ? "+" : "") << r.reps[i];
                std::cout << " k=" << r.dimension << " n_rho=" << r.n_rho.str()
                          << " n_rho_m=" << r.n_rho_m.str();
                if (r.distinct_weights) std::cout << " weights=" << *r.distinct_weights;
                if (r.tight_rho_m) {
                    std::cout << " TIGHT";
                    ++tight;
                }
                std::cout << "\n";
            }
            std::cout << records.size() << " subsets analyzed, " << tight << " tight\n";
            return 0;
        }

        if (repro_cmd->parsed()) {
            auto rows = ccw::run_reproduce(tamper);
            bool all_ok = true;
            ccw::Json jrows = ccw::Json::array();
            for (const auto& row : rows) {
                all_ok = all_ok && row.pass;
                std::cout << (row.pass ? "PASS " : "FAIL ") << row.name;
                if (!row.pass) std::cout << "  [" << row.detail << "]";
                std::cout << "\n";
                jrows.push_back(
                    ccw::Json{{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}});
            }
            std::cout << (all_ok ? "4/4 PASS" : "reproduction FAILED") << "\n";
            if (!json_path.empty()) write_file(json_path, jrows.dump(2) + "\n");
            return all_ok ? 0 : kExitMismatch;
        }
    } catch (const ccw::ValidationError& ex) {
        std::cerr << "error: validation: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const ccw::DomainError& ex) {
        std::cerr << "error: validation: " << ex.what() << "\n";
        return kExitValidation;
    } catch (const ccw::ResourceError& ex) {
        std::cerr << "error: resource: " << ex.what() << "\n";
        return kExitResource;
    } catch (const ccw::InternalError& ex) {
        std::cerr << "error: BUG: " << ex.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& ex) {
        std::cerr << "error: BUG: unexpected exception: " << ex.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
