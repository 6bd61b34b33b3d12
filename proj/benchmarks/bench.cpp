#include <benchmark/benchmark.h>

#include "g2forms/classify.hpp"
#include "g2forms/x7.hpp"

namespace {

using namespace g2f;

void BM_Wedge(benchmark::State& state) {
  KForm w = canonical_split_g2();
  for (auto _ : state) {
    KForm sq = wedge(w, w);
    benchmark::DoNotOptimize(sq);
  }
}
BENCHMARK(BM_Wedge);

void BM_BMatrix(benchmark::State& state) {
  KForm w = canonical_split_g2();
  for (auto _ : state) {
    Matrix b = b_matrix(w);
    benchmark::DoNotOptimize(b);
  }
}
BENCHMARK(BM_BMatrix);

void BM_Stabilizer(benchmark::State& state) {
  KForm w = canonical_split_g2();
  for (auto _ : state) {
    auto basis = stabilizer(w);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_Stabilizer);

void BM_Classify(benchmark::State& state) {
  KForm w = expected_identity_restriction();
  for (auto _ : state) {
    TypeReport r = classify(w);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Classify);

void BM_RestrictCartan(benchmark::State& state) {
  SU3Element g = sample_point(
      RationalQuaternion::cayley(rat(1, 3), rat(-2, 5), rat(1, 7)),
      CirclePoint::tangent_half(rat(3, 4)),
      RationalQuaternion::cayley(rat(2, 3), rat(1, 5), rat(-1, 2)));
  for (auto _ : state) {
    KForm w = restrict_cartan(g);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_RestrictCartan);

void BM_VerifySample(benchmark::State& state) {
  SampleStream stream(42);
  SampleParams p = stream.next();
  SU3Element g = sample_point(p.q1, p.p, p.q2);
  for (auto _ : state) {
    TypeReport r = verify_at(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_VerifySample);

}  // namespace

BENCHMARK_MAIN();
