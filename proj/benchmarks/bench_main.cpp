// SPDX-License-Identifier: MIT
//
// Microbenchmarks over the hot paths of the library: dense GF(p)
// arithmetic, Jordan-type extraction, module spinning, weight-space
// splitting, and the heavier end-to-end constructions.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include <regulib/classical.hpp>
#include <regulib/exactla.hpp>
#include <regulib/jordan.hpp>
#include <regulib/modstruct.hpp>
#include <regulib/reptable.hpp>
#include <regulib/torusnorm.hpp>

namespace {

using regulib::FieldPrime;
using regulib::Matrix;

// Deterministic dense test matrix with a mix of ranks.
Matrix dense_matrix(const FieldPrime& field, std::size_t n) {
  Matrix out(field, n, n);
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      out.set(i, j, static_cast<long long>((state >> 33) %
                                           field.characteristic()));
    }
  }
  return out;
}

void bm_matrix_mul(benchmark::State& state) {
  const FieldPrime field(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Matrix a = dense_matrix(field, n);
  const Matrix b = a.transpose();
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(bm_matrix_mul)->Arg(16)->Arg(32)->Arg(64);

void bm_rank(benchmark::State& state) {
  const FieldPrime field(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Matrix a = dense_matrix(field, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regulib::rank(a));
  }
}
BENCHMARK(bm_rank)->Arg(16)->Arg(32)->Arg(64);

void bm_jordan_type(benchmark::State& state) {
  const FieldPrime field(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix u = regulib::jordan_block(field, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regulib::jordan_type(u.pow(2)));
  }
}
BENCHMARK(bm_jordan_type)->Arg(16)->Arg(24)->Arg(32);

void bm_spin_irreducible(benchmark::State& state) {
  const auto rep = regulib::natural_rep(regulib::RepFamily::C,
                                        /*l=*/3, /*p=*/3);
  const regulib::ModuleAction action(rep.generators);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regulib::is_absolutely_irreducible(action));
  }
}
BENCHMARK(bm_spin_irreducible);

void bm_weight_spaces(benchmark::State& state) {
  const auto datum = regulib::sl_wreath(/*p=*/2, /*a=*/2, /*d=*/3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regulib::weight_spaces(datum.torus));
  }
}
BENCHMARK(bm_weight_spaces);

void bm_containment_witness(benchmark::State& state) {
  const auto datum = regulib::sl_wreath(/*p=*/2, /*a=*/1, /*d=*/3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regulib::containment_witness(datum));
  }
}
BENCHMARK(bm_containment_witness);

void bm_g2_construction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(regulib::g2_rep(3));
  }
}
BENCHMARK(bm_g2_construction);

}  // namespace

BENCHMARK_MAIN();
