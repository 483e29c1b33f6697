#include <benchmark/benchmark.h>

#include <random>

#include "sl3trop/mutation.hpp"
#include "sl3trop/square_geometry.hpp"
#include "sl3trop/tropical_cone.hpp"
#include "sl3trop/webs.hpp"

using namespace sl3t;

namespace {

IntVec random_cone_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, 10);
  IntVec c(12, 0);
  for (int i = 1; i <= kSquareWebCount; ++i) c = add(c, scale(Int(d(rng)), square_web_coords(i)));
  return c;
}

void BM_SquareMutation(benchmark::State& state) {
  auto step = mutation_step(build_square(), kSquareDiagonal);
  std::mt19937_64 rng(0);
  IntVec c = random_cone_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(flip_mutation(c, step));
}
BENCHMARK(BM_SquareMutation);

void BM_PentagonLoop(benchmark::State& state) {
  auto seq = make_flip_sequence(build_pentagon_base(), pentagon_flip_edges(35));
  IntVec c;
  for (int i = 0; i < 17; ++i) c.emplace_back(i * 7 % 13 - 6);
  for (auto _ : state) benchmark::DoNotOptimize(compose_flips(c, seq));
}
BENCHMARK(BM_PentagonLoop);

void BM_HilbertTriangle(benchmark::State& state) {
  auto oracle = ktgs_oracle(build_triangle());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(oracle, 12));
}
BENCHMARK(BM_HilbertTriangle)->Unit(benchmark::kMillisecond);

void BM_HilbertSquare(benchmark::State& state) {
  auto oracle = ktgs_oracle(build_square());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(oracle, state.range(0)));
}
BENCHMARK(BM_HilbertSquare)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_ClassifyFamily(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<IntVec> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(random_cone_point(rng));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_family(pts[k++ % pts.size()]));
}
BENCHMARK(BM_ClassifyFamily);

void BM_SquareInverse(benchmark::State& state) {
  std::mt19937_64 rng(2);
  IntVec c = random_cone_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(square_inverse(c));
}
BENCHMARK(BM_SquareInverse);

void BM_SolveCornerless(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<XVector> xs;
  for (int i = 0; i < 64; ++i) xs.push_back(make_x(d(rng), d(rng), d(rng), d(rng)));
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_cornerless(xs[k++ % xs.size()]));
}
BENCHMARK(BM_SolveCornerless);

}  // namespace

BENCHMARK_MAIN();
