#include <benchmark/benchmark.h>
#include <omp.h>

#include "gcx/complex.hpp"

using namespace gcx;

namespace {

struct Block {
  std::vector<std::string> src, dst;
  Rules R;
};

// Largest differential block of one graded piece.
const Block& block_for(int g, int W) {
  static std::map<std::pair<int, int>, Block> memo;
  auto it = memo.find({g, W});
  if (it != memo.end()) return it->second;
  ComplexSpec s{Variant::GC1TP, Side::Connected, g, 1, W};
  auto B = enumerate_basis(s);
  Block b;
  b.R = rules_for(s);
  for (const auto& [E, v] : B.strata) {
    auto t = B.strata.find(E - 1);
    if (t != B.strata.end() && v.size() > b.src.size()) {
      b.src = v;
      b.dst = t->second;
    }
  }
  return memo[{g, W}] = b;
}

void BM_AssembleSerial(benchmark::State& st) {
  const auto& b = block_for(int(st.range(0)), int(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(assemble_serial(b.src, b.dst, b.R));
  st.counters["columns"] = double(b.src.size());
}

void BM_AssembleParallel(benchmark::State& st) {
  const auto& b = block_for(int(st.range(0)), int(st.range(1)));
  omp_set_num_threads(int(st.range(2)));
  for (auto _ : st) benchmark::DoNotOptimize(assemble(b.src, b.dst, b.R));
  st.counters["columns"] = double(b.src.size());
  st.counters["threads"] = double(st.range(2));
}

}  // namespace

BENCHMARK(BM_AssembleSerial)->Args({4, 2})->Args({5, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleParallel)
    ->ArgsProduct({{4}, {2}, {1, 2, 4}})
    ->ArgsProduct({{5}, {3}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
