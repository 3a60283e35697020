#include <benchmark/benchmark.h>

#include "ordamalg/class_spec.hpp"
#include "ordamalg/enumerate.hpp"
#include "ordamalg/linearization.hpp"
#include "ordamalg/oracle.hpp"
#include "ordamalg/poset_amalgam.hpp"
#include "ordamalg/registry.hpp"

namespace {

using namespace ordamalg;

// Two chains of length n sharing every third element, with f(x) = the next shared point at or above x.
AmalgamationTriple interleaved(int n) {
  std::vector<std::string> a, b, c;
  for (int i = 0; i < n; ++i) {
    const std::string shared = "c" + std::to_string(i);
    if (i % 3 == 0) {
      a.push_back(shared);
      b.push_back(shared);
      c.push_back(shared);
    } else {
      a.push_back("a" + std::to_string(i));
      b.push_back("b" + std::to_string(i));
    }
  }
  auto up = [&](const std::vector<std::string>& xs) {
    std::vector<std::pair<std::string, std::string>> g;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::size_t j = i;
      while (j < xs.size() && xs[j][0] != 'c') ++j;
      g.emplace_back(xs[i], j < xs.size() ? xs[j] : xs[i]);
    }
    return g;
  };
  auto build = [&](const char* name, const std::vector<std::string>& xs) {
    return StructureBuilder(name).chain(xs).op("f", OpKind::preserving, up(xs)).build();
  };
  return {build("A", a), build("B", b), build("C", c)};
}

void BM_PosetAmalgam(benchmark::State& state) {
  const auto t = interleaved(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(amalgamate_posets(t));
}
BENCHMARK(BM_PosetAmalgam)->RangeMultiplier(2)->Range(8, 128);

void BM_LinearizeWithOp(benchmark::State& state) {
  const auto pa = amalgamate_posets(interleaved(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(linearize_with_op(pa));
}
BENCHMARK(BM_LinearizeWithOp)->RangeMultiplier(2)->Range(8, 128);

void BM_StrongSearchAll(benchmark::State& state) {
  const auto t = interleaved(static_cast<int>(state.range(0)));
  const auto spec = parse_class_spec("lo_p");
  for (auto _ : state) benchmark::DoNotOptimize(strong_amalgam_search(t, spec, {false, 1}));
}
BENCHMARK(BM_StrongSearchAll)->DenseRange(4, 7);

void BM_EnumerateClass(benchmark::State& state) {
  const auto spec = parse_class_spec("lo_p");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_class(spec, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateClass)->DenseRange(3, 6);

void BM_TripleSweep(benchmark::State& state) {
  const auto spec = parse_class_spec("po(f:preserving)");
  for (auto _ : state) {
    std::size_t n = for_each_triple(spec, {static_cast<std::size_t>(state.range(0)), false},
                                    [](const AmalgamationTriple& t) { benchmark::DoNotOptimize(poset_amalgam(t)); });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_TripleSweep)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyCounterexamples(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& name : list_counterexamples()) benchmark::DoNotOptimize(verify_counterexample(name));
}
BENCHMARK(BM_VerifyCounterexamples)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
