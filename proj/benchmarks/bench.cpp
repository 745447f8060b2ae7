#include <benchmark/benchmark.h>

#include <string>

#include "g3af/formula_text.hpp"
#include "g3af/framework.hpp"
#include "g3af/meta.hpp"
#include "g3af/translate.hpp"

using namespace g3af;

namespace {

// n arguments on a cycle, each also attacking the one two steps ahead
Framework ring(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> att;
    for (int i = 0; i < n; ++i) {
        att.emplace_back(names[i], names[(i + 1) % n]);
        att.emplace_back(names[i], names[(i + 2) % n]);
    }
    return make_framework(names, att);
}

void BM_EnumerateComplete(benchmark::State& state) {
    const auto f = ring(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_complete(f));
}
BENCHMARK(BM_EnumerateComplete)->DenseRange(4, 12, 4);

void BM_VerifyThm2(benchmark::State& state) {
    const auto f = ring(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_thm2(f));
}
BENCHMARK(BM_VerifyThm2)->DenseRange(3, 7, 2);

void BM_VerifyTheta(benchmark::State& state) {
    const auto f = ring(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_theta(f));
}
BENCHMARK(BM_VerifyTheta)->DenseRange(3, 7, 2);

void BM_SolveHigherPinned(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    const HigherNetwork hn(names);
    std::set<std::pair<std::string, std::string>> pin;
    for (int i = 0; i < n; ++i) pin.emplace(names[i], names[(i + 1) % n]);
    for (auto _ : state) benchmark::DoNotOptimize(solve_higher(hn, {StarScope::AllNodes, pin, 14}));
}
BENCHMARK(BM_SolveHigherPinned)->DenseRange(2, 6, 2);

void BM_SolveHigherFree(benchmark::State& state) {
    HigherNetwork hn({"a", "b"});
    hn.add_wff("phi", parse_pred("exists X (~R(X,X))"));
    hn.add_attack("a", "phi");
    for (auto _ : state) benchmark::DoNotOptimize(solve_higher(hn));
}
BENCHMARK(BM_SolveHigherFree);

}  // namespace

BENCHMARK_MAIN();
