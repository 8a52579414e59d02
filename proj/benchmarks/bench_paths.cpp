#include <benchmark/benchmark.h>

#include <cstdint>

#include "padic/box_parity.hpp"
#include "padic/digit_core.hpp"
#include "padic/theta_engine.hpp"

using namespace padic;

namespace {

void BM_theta_valuation_digit_sum(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t q = n / 3 + 1;
  for (auto _ : state) benchmark::DoNotOptimize(theta_valuation(q, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_theta_valuation_digit_sum)->RangeMultiplier(4)->Range(64, 16384)->Complexity(benchmark::oLogN);

void BM_theta_exact_product(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const std::uint64_t q = n / 3 + 1;
  for (auto _ : state) {
    Nat value = theta_exact(q, n);
    benchmark::DoNotOptimize(value.get_mpz_t());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_theta_exact_product)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_box_valuation_digit_sum(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(box_valuation({a, a + 1, a + 2}));
}
BENCHMARK(BM_box_valuation_digit_sum)->RangeMultiplier(8)->Range(8, 32768);

void BM_box_count_exact(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    Nat value = box_count_exact({a, a + 1, a + 2});
    benchmark::DoNotOptimize(value.get_mpz_t());
  }
}
BENCHMARK(BM_box_count_exact)->RangeMultiplier(2)->Range(8, 128);

void BM_digit_sum_prefix(benchmark::State& state) {
  const auto a = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(digit_sum_prefix(a));
}
BENCHMARK(BM_digit_sum_prefix)->Range(1 << 10, std::int64_t{1} << 40);

void BM_nu_sequence_page(benchmark::State& state) {
  for (auto _ : state) {
    auto seq = nu_sequence(39, 199);
    benchmark::DoNotOptimize(seq.data());
  }
}
BENCHMARK(BM_nu_sequence_page);

}  // namespace

BENCHMARK_MAIN();
