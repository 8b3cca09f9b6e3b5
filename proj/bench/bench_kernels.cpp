// Serial reference against the OpenMP variants of the two exhaustive
// kernels. Outputs must stay identical; only the wall time may differ.

#include <benchmark/benchmark.h>

#include <string>
#include <utility>
#include <vector>
#include "iswb/kernels.hpp"
#include "iswb/poset.hpp"

using namespace iswb;

namespace {

// Cheap but unpredictable predicate so the compiler cannot hoist the loop.
bool mixed_bits(Mask s) {
  std::uint64_t h = s * 0x9e3779b97f4a7c15ull;
  h ^= h >> 29;
  return (h & 7) == 0;
}

void bm_filter_subsets(benchmark::State& state, Exec exec) {
  int nbits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = filter_subsets(nbits, exec, mixed_bits);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * (1LL << nbits));
}

FinPoset chain(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(names[i], names[i + 1]);
  return poset_from_pairs(names, pairs);
}

void bm_way_below_scan(benchmark::State& state, Exec exec) {
  FinPoset P = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Relation r = way_below_scan(P, exec);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK_CAPTURE(bm_filter_subsets, serial, Exec::Serial)->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(bm_filter_subsets, parallel, Exec::Parallel)->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(bm_way_below_scan, serial, Exec::Serial)->Arg(10)->Arg(14);
BENCHMARK_CAPTURE(bm_way_below_scan, parallel, Exec::Parallel)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
