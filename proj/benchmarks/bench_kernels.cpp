// Copyright 2026 The qipsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "qipsim/circuit.hpp"
#include "qipsim/image_codecs.hpp"
#include "qipsim/qft.hpp"

namespace {

using namespace qipsim;

void BM_HadamardOnMiddleQubit(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  StateVector s = new_zero_state(n);
  const UnitaryMatrix h = hadamard();
  const std::vector<Qubit> target{n / 2};
  for (auto _ : st) {
    apply_gate(s, h, target);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_HadamardOnMiddleQubit)->DenseRange(10, 20, 2);

void BM_ToffoliKernel(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  StateVector s = new_zero_state(n);
  const UnitaryMatrix x = pauli_x();
  const std::vector<Qubit> target{0}, controls{1, n - 1};
  for (auto _ : st) {
    apply_gate(s, x, target, controls);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(s.size()));
}
BENCHMARK(BM_ToffoliKernel)->DenseRange(10, 20, 2);

void BM_QftCircuit(benchmark::State& st) {
  const auto m = static_cast<unsigned>(st.range(0));
  const Circuit q = qft_circuit(m);
  StateVector s = new_zero_state(m);
  for (auto _ : st) {
    run(q, s);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_QftCircuit)->DenseRange(4, 16, 4);

void BM_FrqiPrepare(benchmark::State& st) {
  const auto n = static_cast<unsigned>(st.range(0));
  const unsigned side = 1U << n;
  ClassicalImage img{side, side, 255, std::vector<std::uint32_t>(std::size_t{side} * side)};
  for (std::size_t i = 0; i < img.pixels.size(); ++i) img.pixels[i] = (i * 37) % 256;
  const AngleImage angles = to_angles(img);
  for (auto _ : st) {
    auto prepared = frqi_prepare(angles);
    benchmark::DoNotOptimize(prepared.first.state.amplitudes().data());
  }
}
BENCHMARK(BM_FrqiPrepare)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
