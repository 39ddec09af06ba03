// Copyright 2026 The qsplit Authors
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
// Serial reference kernels against their OpenMP counterparts.
//
//   ./build/bench/bench_kernels --benchmark_filter=xor
//
// Arguments are (d, n); the register holds d^n amplitudes.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "qsplit/gates.hpp"
#include "qsplit/kernels.hpp"
#include "qsplit/protocol.hpp"

namespace {

using namespace qsplit;
namespace k = qsplit::kernels;

std::vector<cx> random_amplitudes(int d, int n) {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> g;
  std::vector<cx> v(checked_length(d, n, std::size_t{1} << 26));
  for (cx& a : v) a = {g(gen), g(gen)};
  return v;
}

struct Serial {
  static constexpr auto apply_matrix = k::serial::apply_matrix;
  static constexpr auto apply_digit_map = k::serial::apply_digit_map;
  static constexpr auto apply_xor = k::serial::apply_xor;
  static constexpr auto target_probabilities = k::serial::target_probabilities;
  static constexpr auto partial_trace = k::serial::partial_trace;
};

struct Parallel {
  static constexpr auto apply_matrix = k::parallel::apply_matrix;
  static constexpr auto apply_digit_map = k::parallel::apply_digit_map;
  static constexpr auto apply_xor = k::parallel::apply_xor;
  static constexpr auto target_probabilities = k::parallel::target_probabilities;
  static constexpr auto partial_trace = k::parallel::partial_trace;
};

void set_bytes(benchmark::State& state, std::size_t len) {
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(len * sizeof(cx)));
}

template <typename K>
void BM_qft(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto amps = random_amplitudes(d, n);
  const auto op = qft_operator(d);
  const std::vector<int> targets{n / 2};
  for (auto _ : state) {
    K::apply_matrix({d, n}, amps, op.entries(), targets);
    benchmark::ClobberMemory();
  }
  set_bytes(state, amps.size());
}

template <typename K>
void BM_xor(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto amps = random_amplitudes(d, n);
  for (auto _ : state) {
    K::apply_xor({d, n}, amps, 0, n - 1);
    benchmark::ClobberMemory();
  }
  set_bytes(state, amps.size());
}

template <typename K>
void BM_digit_map(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  auto amps = random_amplitudes(d, n);
  std::vector<int> image(static_cast<std::size_t>(d));
  std::vector<cx> phase(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    image[static_cast<std::size_t>(r)] = (d - 1 - r);
    phase[static_cast<std::size_t>(r)] = std::polar(1.0, 0.3 * r);
  }
  for (auto _ : state) {
    K::apply_digit_map({d, n}, amps, 0, image, phase);
    benchmark::ClobberMemory();
  }
  set_bytes(state, amps.size());
}

template <typename K>
void BM_probabilities(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto amps = random_amplitudes(d, n);
  const std::vector<int> targets{0, n - 1};
  for (auto _ : state) benchmark::DoNotOptimize(K::target_probabilities({d, n}, amps, targets));
  set_bytes(state, amps.size());
}

template <typename K>
void BM_partial_trace(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto amps = random_amplitudes(d, n);
  const std::vector<int> keep{1, n - 2};
  for (auto _ : state) benchmark::DoNotOptimize(K::partial_trace({d, n}, amps, keep));
  set_bytes(state, amps.size());
}

void shapes(benchmark::internal::Benchmark* b) {
  b->Args({2, 16})->Args({2, 20})->Args({4, 8})->Args({4, 10})->Args({7, 7});
  b->Unit(benchmark::kMicrosecond)->UseRealTime();
}

BENCHMARK(BM_qft<Serial>)->Apply(shapes);
BENCHMARK(BM_qft<Parallel>)->Apply(shapes);
BENCHMARK(BM_xor<Serial>)->Apply(shapes);
BENCHMARK(BM_xor<Parallel>)->Apply(shapes);
BENCHMARK(BM_digit_map<Serial>)->Apply(shapes);
BENCHMARK(BM_digit_map<Parallel>)->Apply(shapes);
BENCHMARK(BM_probabilities<Serial>)->Apply(shapes);
BENCHMARK(BM_probabilities<Parallel>)->Apply(shapes);
BENCHMARK(BM_partial_trace<Serial>)->Apply(shapes);
BENCHMARK(BM_partial_trace<Parallel>)->Apply(shapes);

// Whole protocol, sampled outcomes; (d, N) with d^{N+2} amplitudes.
void BM_protocol(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const auto secret = SecretAmplitudes::uniform(d);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_protocol(secret, n, ReconstructionMode::kParallel, seed++));
}
BENCHMARK(BM_protocol)->Args({2, 8})->Args({3, 8})->Args({4, 6})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
