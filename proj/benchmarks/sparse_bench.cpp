// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "spinchannel/spin_core.hpp"

namespace {

using spinchannel::ChainSpec;

void BM_EnumerateSector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto sector = spinchannel::enumerate_sector(n, 0);
    benchmark::DoNotOptimize(sector.dim());
  }
}
BENCHMARK(BM_EnumerateSector)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_BuildHamiltonian(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainSpec spec{n, 1.0, 0.2, std::nullopt};
  const auto sector = spinchannel::enumerate_sector(n, 0);
  for (auto _ : state) {
    auto h = spinchannel::build_chain_hamiltonian(spec, sector);
    benchmark::DoNotOptimize(h.nnz());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(sector.dim()));
}
BENCHMARK(BM_BuildHamiltonian)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_Matvec(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const ChainSpec spec{n, 1.0, 0.2, std::nullopt};
  const auto h = spinchannel::build_chain_hamiltonian(spec, spinchannel::enumerate_sector(n, 0));
  std::vector<double> x(h.dim(), 1.0);
  std::vector<double> y(h.dim());
  for (auto _ : state) {
    h.apply_into(x, y);
    benchmark::DoNotOptimize(y.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(h.nnz()));
}
BENCHMARK(BM_Matvec)->DenseRange(12, 22, 2);

}  // namespace
