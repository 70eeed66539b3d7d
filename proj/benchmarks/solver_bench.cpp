// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "spinchannel/eigensolve.hpp"
#include "spinchannel/krylov.hpp"
#include "spinchannel/spin_core.hpp"

namespace {

using spinchannel::ChainSpec;

void BM_LowestEigenpairs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainSpec spec{n, 1.0, 0.1, std::nullopt};
  const auto h = spinchannel::build_chain_hamiltonian(spec, spinchannel::enumerate_sector(n, 0));
  for (auto _ : state) {
    auto pairs = spinchannel::lowest_eigenpairs(h, 2);
    benchmark::DoNotOptimize(pairs.front().energy);
  }
}
BENCHMARK(BM_LowestEigenpairs)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

void BM_SpectralData(benchmark::State& state) {
  const ChainSpec spec{static_cast<int>(state.range(0)), 1.0, 0.1, std::nullopt};
  for (auto _ : state) {
    auto s = spinchannel::spectral_data(spec);
    benchmark::DoNotOptimize(s.gap);
  }
}
BENCHMARK(BM_SpectralData)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_KrylovStep(benchmark::State& state) {
  const int length = static_cast<int>(state.range(0));
  const ChainSpec spec{length, 1.0, 0.1, 0.01};
  const auto h = spinchannel::build_transfer_hamiltonian(spec, spinchannel::enumerate_sector(length + 1, 1));
  spinchannel::ComplexVector psi(h.dim(), std::complex<double>(1.0 / std::sqrt(static_cast<double>(h.dim())), 0.0));
  spinchannel::KrylovPropagator prop(h);
  for (auto _ : state) {
    prop.evolve(psi, 1.0);
    benchmark::DoNotOptimize(psi.data());
  }
}
BENCHMARK(BM_KrylovStep)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace
