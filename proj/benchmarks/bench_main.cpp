#include <benchmark/benchmark.h>

#include "seifcov/text.hpp"
#include "seifcov/verify.hpp"

using namespace seifcov;

namespace {

// A mid-size workload: non-orientable base, four exceptional fibers.
const SeifertInvariants& workload() {
    static SeifertInvariants inv =
        parse_seifert("{2;(n3,3);(4,3),(6,1),(9,2),(2,1)}");
    return inv;
}

Z2Hom first_hom(const SeifertInvariants& inv) {
    Presentation p = fundamental_presentation(inv);
    return enumerate_epimorphisms(p).front();
}

void BM_fundamental_presentation(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fundamental_presentation(workload()));
}
BENCHMARK(BM_fundamental_presentation);

void BM_enumerate_epimorphisms(benchmark::State& state) {
    Presentation p = fundamental_presentation(workload());
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_epimorphisms(p));
}
BENCHMARK(BM_enumerate_epimorphisms);

void BM_smith_normal_form(benchmark::State& state) {
    IntMatrix M = exponent_matrix(fundamental_presentation(workload()));
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(M));
}
BENCHMARK(BM_smith_normal_form);

void BM_kernel_presentation(benchmark::State& state) {
    Presentation p = fundamental_presentation(workload());
    Z2Hom phi = first_hom(workload());
    for (auto _ : state) benchmark::DoNotOptimize(kernel_presentation(p, phi));
}
BENCHMARK(BM_kernel_presentation);

void BM_double_cover(benchmark::State& state) {
    Z2Hom phi = first_hom(workload());
    for (auto _ : state) benchmark::DoNotOptimize(double_cover(workload(), phi));
}
BENCHMARK(BM_double_cover);

void BM_verify_cover(benchmark::State& state) {
    Z2Hom phi = first_hom(workload());
    for (auto _ : state) benchmark::DoNotOptimize(verify_cover(workload(), phi));
}
BENCHMARK(BM_verify_cover);

}  // namespace

BENCHMARK_MAIN();
