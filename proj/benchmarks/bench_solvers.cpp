#include "credal/oracle.hpp"
#include "credal/scenario.hpp"
#include "credal/updates.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace credal;

std::vector<Rational> random_distribution(std::mt19937_64& rng, size_t n) {
    std::uniform_int_distribution<unsigned> d(0, 6);
    std::vector<unsigned> w(n);
    unsigned total = 0;
    while (total == 0) {
        for (auto& v : w) {
            v = d(rng);
            total += v;
        }
    }
    std::vector<Rational> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = Rational(w[i]) / Rational(total);
    return out;
}

CredalSet random_set(std::mt19937_64& rng, size_t nx, size_t ny, size_t nv) {
    std::vector<JointDistribution> verts;
    for (size_t i = 0; i < nv; ++i) verts.emplace_back(nx, ny, random_distribution(rng, nx * ny));
    return CredalSet(nx, ny, std::move(verts));
}

void BM_SolveAprioriExample1(benchmark::State& state) {
    const Scenario s = builtin_scenario("example1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_apriori(s.credal, s.loss));
    }
}
BENCHMARK(BM_SolveAprioriExample1);

void BM_SolveAprioriRandom(benchmark::State& state) {
    std::mt19937_64 rng(17);
    const size_t nx = static_cast<size_t>(state.range(0));
    const auto set = random_set(rng, nx, 3, 5);
    std::vector<Rational> table(3 * 3);
    std::uniform_int_distribution<int> d(-2, 6);
    for (auto& v : table) v = Rational(d(rng));
    const LossFunction loss(3, 3, table);
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_apriori(set, loss));
    }
}
BENCHMARK(BM_SolveAprioriRandom)->Arg(2)->Arg(4);

void BM_MatrixGame(benchmark::State& state) {
    std::mt19937_64 rng(23);
    const size_t n = static_cast<size_t>(state.range(0));
    std::uniform_int_distribution<int> d(-4, 8);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (auto& row : m) {
        for (auto& v : row) v = Rational(d(rng)) / 2;
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_matrix_game(m));
    }
}
BENCHMARK(BM_MatrixGame)->Arg(4)->Arg(8);

void BM_HullExample1(benchmark::State& state) {
    const Scenario s = builtin_scenario("example1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.credal.hull());
    }
}
BENCHMARK(BM_HullExample1);

void BM_GridOracleMonty(benchmark::State& state) {
    const Scenario s = builtin_scenario("monty_hall");
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_minimax(s.credal, s.loss, n));
    }
}
BENCHMARK(BM_GridOracleMonty)->Arg(2)->Arg(4);

void BM_SharpPartitions(benchmark::State& state) {
    std::mt19937_64 rng(31);
    const auto set = random_set(rng, static_cast<size_t>(state.range(0)), 2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sharp_partitions(set));
    }
}
BENCHMARK(BM_SharpPartitions)->Arg(3);

} // namespace

BENCHMARK_MAIN();
