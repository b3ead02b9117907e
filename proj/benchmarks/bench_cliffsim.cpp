#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cliffsim/clifford_element.hpp"
#include "cliffsim/dense_matrix.hpp"
#include "cliffsim/pauli_string.hpp"
#include "cliffsim/state_vector.hpp"

namespace {

using namespace cliffsim;

PauliString random_string(std::mt19937& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> mask(0, mask_low(n));
  std::uniform_int_distribution<int> ph(0, 3);
  return PauliString(n, mask(rng), mask(rng), ph(rng));
}

void BM_StringMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(12345);
  const PauliString a = random_string(rng, n);
  const PauliString b = random_string(rng, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
}
BENCHMARK(BM_StringMul)->Arg(4)->Arg(16)->Arg(64);

void BM_ElementMul(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  const int n = 16;
  std::mt19937 rng(999);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  CliffordElement a(n);
  CliffordElement b(n);
  for (int t = 0; t < terms; ++t) {
    a.add_term(random_string(rng, n), {coeff(rng), coeff(rng)});
    b.add_term(random_string(rng, n), {coeff(rng), coeff(rng)});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(elem_mul(a, b));
  }
}
BENCHMARK(BM_ElementMul)->Arg(4)->Arg(16)->Arg(64);

void BM_ApplyString(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(777);
  StateVector psi(n);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    psi.amp(i) = {amp(rng), amp(rng)};
  }
  const PauliString p = random_string(rng, n);
  for (auto _ : state) {
    StateVector out = apply_string(p, psi);
    benchmark::DoNotOptimize(out.amp(0));
  }
}
BENCHMARK(BM_ApplyString)->Arg(10)->Arg(16)->Arg(20);

void BM_ToMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(31415);
  const PauliString p = random_string(rng, n);
  for (auto _ : state) {
    DenseMatrix m = to_matrix(p);
    benchmark::DoNotOptimize(m.at(0, 0));
  }
}
BENCHMARK(BM_ToMatrix)->Arg(2)->Arg(6)->Arg(8);

void BM_Decompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  CliffordElement a(n);
  for (int t = 0; t < 8; ++t) {
    a.add_term(random_string(rng, n), {coeff(rng), coeff(rng)});
  }
  const DenseMatrix m = to_matrix(a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(m));
  }
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
