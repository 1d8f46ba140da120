#include <benchmark/benchmark.h>

#include <random>

#include "jumploci/artin.hpp"
#include "jumploci/charvar.hpp"
#include "jumploci/fixtures.hpp"
#include "jumploci/tangentcone.hpp"

using namespace jumploci;

namespace {

Matrix<Scalar> random_rational_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-99, 99);
    std::uniform_int_distribution<int> den(1, 16);
    Matrix<Scalar> m(rows, cols, Scalar(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar(Rational(num(rng), den(rng)));
    return m;
}

void bm_rank_and_kernel(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix<Scalar> m = random_rational_matrix(n, n + 4, 12345);
    for (auto _ : state) {
        RankKernel rk = rank_and_kernel(m);
        benchmark::DoNotOptimize(rk.rank);
    }
}
BENCHMARK(bm_rank_and_kernel)->Arg(10)->Arg(20)->Arg(40);

void bm_resonance_minors(benchmark::State& state) {
    CupData cup = cup_from_presentation(fixtures::a2134());
    for (auto _ : state) {
        auto ms = resonance_minors(cup, 1);
        benchmark::DoNotOptimize(ms.size());
    }
}
BENCHMARK(bm_resonance_minors);

void bm_contains_subspace(benchmark::State& state) {
    CupData cup = cup_config_torus(3);
    Subspace full = Subspace::kernel_of(6, {});
    for (auto _ : state) {
        bool r = resonance_contains_subspace(cup, full, 1);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(bm_contains_subspace);

void bm_tau1_partitions(benchmark::State& state) {
    MultiPoly f(2);
    int terms = static_cast<int>(state.range(0));
    for (int i = 0; i < terms; ++i) f.add_term({i, terms - i}, Scalar(i % 2 == 0 ? 1 : -1));
    for (auto _ : state) {
        SubspaceArrangement a = tau1_single(f, terms);
        benchmark::DoNotOptimize(a.parts().size());
    }
}
BENCHMARK(bm_tau1_partitions)->Arg(6)->Arg(8)->Arg(10);

void bm_max_disconnected(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) == 0) edges.emplace_back(a, b);
    Graph g(names, edges);
    for (auto _ : state) {
        auto sets = maximal_disconnected_subsets(g);
        benchmark::DoNotOptimize(sets.size());
    }
}
BENCHMARK(bm_max_disconnected)->Arg(8)->Arg(12);

void bm_fox_jacobian(benchmark::State& state) {
    Presentation p = raag_presentation(fixtures::complete_graph(5));
    Character rho = Character::make({Scalar(2), Scalar(3), Scalar(Rational(1, 2)), Scalar(5), Scalar(7)});
    for (auto _ : state) {
        Matrix<Scalar> m = fox_jacobian(p, rho);
        benchmark::DoNotOptimize(m.rows());
    }
}
BENCHMARK(bm_fox_jacobian);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
