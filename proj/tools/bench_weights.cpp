// Benchmark: serial Gray-walk weight enumeration vs the OpenMP kernel on the
// same code, verifying identical histograms.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "ccw/report.hpp"
#include "ccw/weights.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
    CLI::App app{"weight-enumeration kernel benchmark"};
    std::uint32_t p = 2, e = 1;
    std::uint64_t n = 25;
    std::string lambda = "1";
    std::string cosets = "1";
    int repeat = 3;
    int threads = 0;
    std::uint64_t cap = ccw::kDefaultEnumCap;
    app.add_option("--p", p)->capture_default_str();
    app.add_option("--e", e)->capture_default_str();
    app.add_option("--n", n)->capture_default_str();
    app.add_option("--lambda", lambda)->capture_default_str();
    app.add_option("--cosets", cosets, "comma-separated coset representatives")->capture_default_str();
    app.add_option("--repeat", repeat)->capture_default_str();
    app.add_option("--threads", threads, "0 = OpenMP default")->capture_default_str();
    app.add_option("--enum-cap", cap)->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    try {
        ccw::CodeParams params = ccw::make_code_params(p, e, n, ccw::parse_lambda(lambda));
        auto system = ccw::cosets_in_S(params.q(), n, params.t);
        bool all = false;
        std::vector<std::uint64_t> reps;
        {
            std::stringstream ss(cosets);
            std::string item;
            while (std::getline(ss, item, ',')) reps.push_back(std::stoull(item));
            (void)all;
        }
        std::vector<std::uint64_t> alphas;
        for (std::uint64_t r : reps) alphas.push_back(ccw::coset_of(r, *system).alpha);
        ccw::Code code = ccw::build_code_small_fields(params, system, alphas);
        std::uint64_t words = ccw::codeword_count(code, cap);
        std::printf("code: q=%llu n=%llu k=%llu (%llu codewords)\n",
                    static_cast<unsigned long long>(code.q()),
                    static_cast<unsigned long long>(code.n()),
                    static_cast<unsigned long long>(code.dimension),
                    static_cast<unsigned long long>(words));

        auto time_runs = [&](auto&& fn) {
            double best = 1e100;
            for (int i = 0; i < repeat; ++i) {
                auto t0 = std::chrono::steady_clock::now();
                fn();
                auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
                best = std::min(best, dt.count());
            }
            return best;
        };

        ccw::WeightDistribution serial, parallel;
        double ts = time_runs([&] { serial = ccw::weight_distribution_serial(code, cap); });
        double tp = time_runs([&] {
            parallel = ccw::weight_distribution(code, ccw::EnumOptions{cap, threads, 4096});
        });
        if (!(serial == parallel)) {
            std::fprintf(stderr, "MISMATCH between serial and parallel histograms\n");
            return 1;
        }
        int used_threads = 1;
#ifdef _OPENMP
        used_threads = threads > 0 ? threads : omp_get_max_threads();
#endif
        std::printf("serial   : %8.3f ms  (%.1f Mwords/s)\n", ts * 1e3, words / ts / 1e6);
        std::printf("parallel : %8.3f ms  (%.1f Mwords/s, %d threads)\n", tp * 1e3, words / tp / 1e6,
                    used_threads);
        std::printf("speedup  : %.2fx\n", ts / tp);
        return 0;
    } catch (const std::exception& ex) {
        std::fprintf(stderr, "error: %s\n", ex.what());
        return 1;
    }
}
