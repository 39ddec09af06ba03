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
#include <doctest.h>

#include <cmath>
#include <random>
#include <span>

#include "qsplit/gates.hpp"
#include "qsplit/oracle.hpp"
#include "test_support.hpp"

using namespace qsplit;
using namespace qsplit::oracle;
using namespace qsplit::testing;

namespace {

double dense_deviation(std::span<const cx> a, std::span<const cx> b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("dense building blocks") {
  const auto h = qft_matrix(2);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(h(0, 0) - r) <= kAlgebraTol);
  CHECK(std::abs(h(1, 1) + r) <= kAlgebraTol);

  const auto i2 = DenseMatrix::identity(2);
  const auto hi = h.kron(i2);
  CHECK(hi.dim() == 4);
  CHECK(std::abs(hi(2, 0) - r) <= kAlgebraTol);
  CHECK(hi(1, 0) == cx{});

  for (int d = 2; d <= 5; ++d) {
    const auto x = xor_matrix(d);
    auto p = DenseMatrix::identity(static_cast<std::size_t>(d * d));
    for (int i = 0; i < d; ++i) p = p * x;
    CHECK(dense_deviation(p.apply(std::vector<cx>(static_cast<std::size_t>(d * d), 1.0)),
                          std::vector<cx>(static_cast<std::size_t>(d * d), 1.0)) <= kAlgebraTol);
    const auto f = DenseMatrix::from_operator(qft_operator(d));
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) CHECK(std::abs(f(a, b) - qft_matrix(d)(a, b)) <= kAlgebraTol);
  }
}

TEST_CASE("embedded gates agree with the stride kernels") {
  std::mt19937_64 gen(61);
  for (int d = 2; d <= 3; ++d)
    for (int n = 2; n <= 4; ++n) {
      const auto psi = random_register(d, n, gen);
      const std::vector<cx> v(psi.amplitudes().begin(), psi.amplitudes().end());
      for (int p = 0; p < n; ++p) {
        const auto dense = embed_single(d, n, qft_matrix(d), p).apply(v);
        CHECK(dense_deviation(dense, qft_apply(psi, p).amplitudes()) <= kAlgebraTol);
        const auto ph = embed_single(d, n, phase_matrix(d, d - 1), p).apply(v);
        CHECK(dense_deviation(ph, phase_correction(psi, p, d - 1).amplitudes()) <= kAlgebraTol);
        const auto rl = embed_single(d, n, relabel_matrix(d, 1), p).apply(v);
        CHECK(dense_deviation(rl, bob_mu_correction(psi, p, 1).amplitudes()) <= kAlgebraTol);
        const auto b1 = embed_single(d, n, bob1_correction_matrix(d, 1, d - 1), p).apply(v);
        CHECK(dense_deviation(b1, bob1_correction(psi, p, 1, d - 1).amplitudes()) <= kAlgebraTol);
        for (int q = 0; q < n; ++q) {
          if (q == p) continue;
          const auto x = embed_pair(d, n, xor_matrix(d), p, q).apply(v);
          CHECK(dense_deviation(x, xor_apply(psi, p, q).amplitudes()) <= kAlgebraTol);
          const auto u = random_unitary(static_cast<std::size_t>(d * d), gen);
          const auto ud = embed_pair(d, n, DenseMatrix::from_operator(u), p, q).apply(v);
          const int t[] = {p, q};
          CHECK(dense_deviation(ud, apply_local(psi, u, t).amplitudes()) <= kAlgebraTol);
        }
      }
    }
}

TEST_CASE("dense_collapse agrees with collapse") {
  std::mt19937_64 gen(62);
  const auto psi = random_register(3, 3, gen);
  const std::vector<int> t{2, 0};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const auto dense = dense_collapse(3, 3, {psi.amplitudes().begin(), psi.amplitudes().end()}, t, Digits{a, b});
      const auto fast = collapse(psi, t, Digits{a, b});
      CHECK(std::abs(dense.probability - fast.probability) <= kAlgebraTol);
      CHECK(dense_deviation(dense.state, fast.remaining.amplitudes()) <= kAlgebraTol);
    }
}

TEST_CASE("dense protocol check") {
  SUBCASE("qubit, two Bobs") {
    const SecretAmplitudes s({0.6, cx{0.0, 0.8}});
    for (auto mode : {ReconstructionMode::kSequential, ReconstructionMode::kParallel}) {
      const auto r = dense_protocol_check(s, 2, mode);
      CHECK(r.branches == 8);
      CHECK(r.split_probabilities.size() == 4);
      for (const auto& [o, p] : r.split_probabilities) CHECK(std::abs(p - 0.25) <= kAlgebraTol);
      CHECK(r.max_fast_path_deviation <= kAlgebraTol);
      CHECK(r.min_fidelity >= 1.0 - kFidelityTol);
      CHECK(r.passed());
    }
  }
  SUBCASE("grid of reference secrets") {
    for (int d = 2; d <= 4; ++d)
      for (int n = 1; n <= 3; ++n)
        for (const auto& s : reference_secrets(d)) {
          const auto r = dense_protocol_check(s, n, ReconstructionMode::kSequential);
          std::size_t expect = static_cast<std::size_t>(d * d);
          for (int i = 1; i < n; ++i) expect *= static_cast<std::size_t>(d);
          CHECK(r.branches == expect);
          CHECK(r.max_universality_deviation <= kAlgebraTol);
          CHECK(r.max_reconstruction_probability_error <= kAlgebraTol);
          CHECK(r.passed());
        }
  }
  SUBCASE("deterministic") {
    const auto s = reference_secrets(3).back();
    const auto a = dense_protocol_check(s, 3, ReconstructionMode::kParallel);
    const auto b = dense_protocol_check(s, 3, ReconstructionMode::kParallel);
    CHECK(a.max_fast_path_deviation == b.max_fast_path_deviation);
    CHECK(a.split_probabilities == b.split_probabilities);
  }
  CHECK_THROWS_AS(dense_protocol_check(SecretAmplitudes::uniform(6), 3,
                                       ReconstructionMode::kSequential),
                  CapExceeded);
  CHECK_THROWS_AS(dense_protocol_check(SecretAmplitudes::uniform(2), 3,
                                       ReconstructionMode::kSequential, 16),
                  CapExceeded);
}

TEST_CASE("qubit fixtures") {
  const double r = 1.0 / std::sqrt(2.0);
  for (auto [a, b] : {std::pair<cx, cx>{1.0, 0.0}, {0.0, 1.0}, {r, r}, {r, cx{0.0, r}}}) {
    const auto rep = qubit_fixture_check(a, b);
    CHECK(rep.checks == 12);
    CHECK(rep.passed());
  }
  std::mt19937_64 gen(63);
  for (int i = 0; i < 50; ++i) {
    const auto s = random_alphas(2, gen);
    CHECK(qubit_fixture_check(s[0], s[1]).passed());
  }
}

TEST_CASE("marginal sweep") {
  for (int d = 2; d <= 4; ++d)
    for (int n = 2; n <= 4; ++n) {
      if (checked_length(d, n + 2, std::size_t{1} << 40) > kDefaultOracleCap) continue;
      for (const auto& s : reference_secrets(d)) {
        const auto r = marginal_sweep(s, n);
        CHECK(r.subsets_checked > 0);
        CHECK(r.passed());
      }
    }
  const auto one = marginal_sweep(SecretAmplitudes::uniform(2), 1);
  CHECK(one.subsets_checked == 0);
  CHECK(one.passed());
}

TEST_CASE("reference secrets") {
  for (int d = 2; d <= 6; ++d) {
    const auto v = reference_secrets(d);
    CHECK(v.size() == 4);
    for (const auto& s : v) {
      double n2 = 0.0;
      for (int k = 0; k < d; ++k) n2 += std::norm(s[k]);
      CHECK(std::abs(n2 - 1.0) <= kAlgebraTol);
    }
  }
}
