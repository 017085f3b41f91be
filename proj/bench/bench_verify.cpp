// Reference checkers against the word-parallel OpenMP checkers.

#include "sic/codegen.hpp"
#include "sic/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace sic;

const BinaryCode& example1() {
  static const BinaryCode code = binary_expand(shorten(rs_extended(FiniteField(5), 5), 2));
  return code;
}

const BinaryCode& example3() {
  static const BinaryCode code = binary_expand(shorten(rs_extended(FiniteField(8), 5), 2));
  return code;
}

BinaryCode column_prefix(const BinaryCode& code, std::size_t cols) {
  BinaryCode out(code.rows(), cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < code.rows(); ++i) out.set(i, j, code.get(i, j));
  return out;
}

// Incidence matrix of all pairs of t columns; it satisfies the properties
// benchmarked below, so the checkers walk their whole domain.
BinaryCode pair_incidence(std::size_t t) {
  BinaryCode code(t * (t - 1) / 2, t);
  std::size_t row = 0;
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = a + 1; b < t; ++b, ++row) {
      code.set(row, a, true);
      code.set(row, b, true);
    }
  return code;
}

template <bool Parallel>
void BM_DCode(benchmark::State& state) {
  const BinaryCode code = column_prefix(example1(), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto r = Parallel ? check_d_code(code, 3, 2) : reference::check_d_code(code, 3, 2);
    benchmark::DoNotOptimize(r.tuples_checked);
  }
}
BENCHMARK(BM_DCode<false>)->Name("d_code/reference")->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DCode<true>)->Name("d_code/parallel")->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_CoverFree(benchmark::State& state) {
  const BinaryCode code = pair_incidence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto r = Parallel ? check_cover_free(code, 2, 2) : reference::check_cover_free(code, 2, 2);
    benchmark::DoNotOptimize(r.tuples_checked);
  }
}
BENCHMARK(BM_CoverFree<false>)->Name("cover_free/reference")->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverFree<true>)->Name("cover_free/parallel")->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_Threshold(benchmark::State& state) {
  const BinaryCode code = pair_incidence(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto r = Parallel ? check_threshold_design(code, 1, 3) : reference::check_threshold_design(code, 1, 3);
    benchmark::DoNotOptimize(r.tuples_checked);
  }
}
BENCHMARK(BM_Threshold<false>)->Name("threshold/reference")->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Threshold<true>)->Name("threshold/parallel")->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_Coincidence(benchmark::State& state) {
  const BinaryCode& code = example3();
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? coincidence(code) : reference::coincidence(code));
}
BENCHMARK(BM_Coincidence<false>)->Name("coincidence/reference")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Coincidence<true>)->Name("coincidence/parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
