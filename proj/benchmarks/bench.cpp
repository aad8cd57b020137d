#include <benchmark/benchmark.h>

#include "linkobs/deleted_product.hpp"
#include "linkobs/links.hpp"
#include "linkobs/rng.hpp"

using namespace linkobs;

namespace {

Complex join_complex(int n) {
  return join_with_points(skeleton(2 * n, n - 1), {"a", "b", "c"}).first;
}

void BM_Gf2Rank(benchmark::State& state) {
  SplitMix64 rng(1);
  std::size_t rows = static_cast<std::size_t>(state.range(0));
  std::size_t cols = 4 * rows;
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.next() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(m));
}
BENCHMARK(BM_Gf2Rank)->Arg(90)->Arg(420);

void BM_DeletedProductBuild(benchmark::State& state) {
  Complex K = join_complex(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    QuotientDeletedComplex D(K);
    benchmark::DoNotOptimize(D.max_grade());
  }
}
BENCHMARK(BM_DeletedProductBuild)->Arg(1)->Arg(2)->Arg(3);

void BM_TopCoboundary(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Complex K = join_complex(n);
  QuotientDeletedComplex D(K);
  for (auto _ : state) benchmark::DoNotOptimize(top_coboundary(D, n).rows());
}
BENCHMARK(BM_TopCoboundary)->Arg(2)->Arg(3);

void BM_DoublePointTable(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Complex K = join_complex(n);
  GeometricMap map = random_geometric_map(K, 2 * n, 1000000, 7);
  for (auto _ : state) benchmark::DoNotOptimize(double_point_table(map, n).total);
}
BENCHMARK(BM_DoublePointTable)->Arg(1)->Arg(2);

void BM_IsEmbeddingM2(benchmark::State& state) {
  GeometricMap map = embed_M_suspension(build_M(2), default_moment_params(2));
  for (auto _ : state) benchmark::DoNotOptimize(is_embedding(map));
}
BENCHMARK(BM_IsEmbeddingM2);

void BM_Lk2MomentTriangles(benchmark::State& state) {
  GeometricMap base = moment_base_map(2, default_moment_params(2));
  Complex g = Complex::closure({Simplex{0, 2}, Simplex{2, 4}, Simplex{0, 4}});
  Complex d = Complex::closure({Simplex{1, 3}, Simplex{3, 5}, Simplex{1, 5}});
  for (auto _ : state) benchmark::DoNotOptimize(lk2(base, g, d, {1}));
}
BENCHMARK(BM_Lk2MomentTriangles);

}  // namespace

BENCHMARK_MAIN();
