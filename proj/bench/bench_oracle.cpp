#include <chrono>
#include <cstdint>
#include <iostream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "causal/gen.hpp"
#include "causal/verify.hpp"

namespace {

using namespace causal;

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
#endif
}

bool same_report(const verify::CheckReport<verify::ConeWitness>& a,
                 const verify::CheckReport<verify::ConeWitness>& b) {
    if (a.passed != b.passed || a.trials != b.trials) return false;
    if (a.first_counterexample.has_value() != b.first_counterexample.has_value()) return false;
    if (a.first_counterexample &&
        a.first_counterexample->pair_index != b.first_counterexample->pair_index)
        return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pair-sweep oracle, serial reference against the parallel kernel"};
    int elements = 10;
    int grid_n = 31;
    std::uint64_t seed = 1;
    app.add_option("--elements", elements, "sampled automorphisms")->check(CLI::Range(1, 1000));
    app.add_option("--grid", grid_n, "axis points per side")->check(CLI::Range(2, 200));
    app.add_option("--seed", seed, "base seed");
    CLI11_PARSE(app, argc, argv);

    gen::GenParams params;
    params.seed = seed;
    const verify::GridSpec grid{-10, 10, grid_n};

    double serial_s = 0, parallel_s = 0;
    long long pairs = 0;
    bool identical = true;
    for (int i = 0; i < elements; ++i) {
        const HElement a = gen::gen_helement(gen::derive(params, static_cast<std::uint64_t>(i)));
        const verify::PointMap map = [&a](const Event& e) { return apply(a, e); };
        for (const verify::Relation rel : {verify::Relation::Causal,
                                           verify::Relation::Chronological}) {
            const double t0 = now();
            const auto ref = verify::check_cone_preservation_serial(map, grid, rel);
            const double t1 = now();
            const auto par = verify::check_cone_preservation(map, grid, rel);
            const double t2 = now();
            serial_s += t1 - t0;
            parallel_s += t2 - t1;
            pairs += ref.trials;
            identical = identical && same_report(ref, par);
            if (!ref.passed) {
                std::cerr << "generated element failed the oracle, seed bug\n";
                return 1;
            }
        }
    }

    int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
#pragma omp single
    threads = omp_get_num_threads();
#endif

    std::cout << "elements " << elements << ", grid " << grid_n << "x" << grid_n << ", "
              << pairs << " ordered pairs per pass\n";
    std::cout << "serial   " << serial_s << " s\n";
    std::cout << "parallel " << parallel_s << " s  (" << threads << " thread"
              << (threads == 1 ? "" : "s") << ", speedup " << serial_s / parallel_s << "x)\n";
    std::cout << "reports " << (identical ? "identical" : "DIVERGED") << "\n";
    return identical ? 0 : 1;
}
