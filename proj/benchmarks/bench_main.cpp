#include <benchmark/benchmark.h>

#include <random>

#include "stablehom/exact_linear.hpp"
#include "stablehom/putnam_complex.hpp"

using namespace stablehom;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

// k-fold cover of the full 2-shift, glued along one z-vertex class.
FiberedPresentation cyclic_cover(std::size_t k) {
  std::vector<std::string> vertices;
  std::vector<Graph::EdgeSpec> edges;
  for (std::size_t i = 0; i < k; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<std::size_t> stay, shift;
  for (std::size_t i = 0; i < k; ++i) {
    stay.push_back(edges.size());
    edges.push_back({"s" + std::to_string(i), vertices[i], vertices[i]});
    shift.push_back(edges.size());
    edges.push_back({"t" + std::to_string(i), vertices[i], vertices[(i + 1) % k]});
  }
  FiberedPresentation p = FiberedPresentation::sft(Graph::from_ids(vertices, edges));
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  p.z_vertex = Partition::from_classes({all}, k);
  p.z_edge = Partition::from_classes({stay, shift}, 2 * k);
  return p;
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const IntMatrix m = random_matrix(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HomologyCyclicCover(benchmark::State& state) {
  const FiberedPresentation p = cyclic_cover(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(p, 1));
}
BENCHMARK(BM_HomologyCyclicCover)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
