#include <benchmark/benchmark.h>

#include <cmath>

#include "sqmodel/abelianization.hpp"
#include "sqmodel/canned_shapes.hpp"
#include "sqmodel/freeness.hpp"
#include "sqmodel/presentation.hpp"
#include "sqmodel/random_graph.hpp"
#include "sqmodel/word_pair_graph.hpp"

namespace {

void SamplePresentation(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const sqm::Presentation p =
        sqm::sample_presentation(n, sqm::Density::parse("0.3"), sqm::ModelKind::Square, seed++);
    benchmark::DoNotOptimize(p.relators.data());
  }
}
BENCHMARK(SamplePresentation)->Arg(16)->Arg(64)->Arg(256);

void DetectTrivial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const sqm::Presentation p =
      sqm::sample_presentation(n, sqm::Density::parse("0.65"), sqm::ModelKind::PositiveSquare, 7);
  for (auto _ : state) {
    const auto v = sqm::detect_trivial(p);
    benchmark::DoNotOptimize(v.status);
  }
}
BENCHMARK(DetectTrivial)->Arg(16)->Arg(50);

void DetectFree(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const sqm::Presentation p =
      sqm::sample_presentation(n, sqm::Density::parse("0.1"), sqm::ModelKind::PositiveSquare, 7);
  for (auto _ : state) {
    const auto r = sqm::detect_free(p);
    benchmark::DoNotOptimize(r.certified());
  }
}
BENCHMARK(DetectFree)->Arg(50)->Arg(200);

void SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const sqm::Presentation p =
      sqm::sample_presentation(n, sqm::Density::parse("0.6"), sqm::ModelKind::Square, 7);
  for (auto _ : state) {
    const auto inv = sqm::abelian_invariants(p);
    benchmark::DoNotOptimize(inv.free_rank);
  }
}
BENCHMARK(SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void GnpThresholdTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto g = sqm::sample_gnp(n, std::pow(n, -0.5), seed++);
    benchmark::DoNotOptimize(sqm::is_connected(g));
  }
}
BENCHMARK(GnpThresholdTrial)->Arg(100)->Arg(400);

void FulfillmentSearch(benchmark::State& state) {
  const sqm::Presentation p =
      sqm::sample_presentation(6, sqm::Density::parse("0.2"), sqm::ModelKind::Square, 11);
  const sqm::AbstractDiagram& b = sqm::collared_diagrams()[1].diagram;
  for (auto _ : state) {
    const auto results = sqm::find_fulfillments(b, p.relators, 1);
    benchmark::DoNotOptimize(results.size());
  }
}
BENCHMARK(FulfillmentSearch);

}  // namespace

BENCHMARK_MAIN();
