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
#pragma once

// Brute-force second path for the splitting protocol.
//
// Nothing here touches the stride kernels: gates are embedded into full
// register unitaries by Kronecker products (or explicit element placement
// for two-qudit gates on non-adjacent qudits), measurements are done by
// scanning every basis index. The fast path is then compared against this
// on every enumerated branch. No randomness anywhere in this module.

#include <cstddef>
#include <map>
#include <vector>

#include "qsplit/protocol.hpp"
#include "qsplit/register.hpp"

namespace qsplit::oracle {

/// Full-size dense complex matrix, row-major.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix from_operator(const Operator& op);

  std::size_t dim() const { return dim_; }
  cx& operator()(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  cx operator()(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  DenseMatrix kron(const DenseMatrix& rhs) const;
  DenseMatrix operator*(const DenseMatrix& rhs) const;
  std::vector<cx> apply(const std::vector<cx>& v) const;

 private:
  std::size_t dim_;
  std::vector<cx> e_;
};

/// 1^{⊗pos} ⊗ U ⊗ 1^{⊗(n−pos−1)}.
DenseMatrix embed_single(int d, int n, const DenseMatrix& u, int pos);
/// Two-qudit U on (first, second), identity elsewhere, any placement.
DenseMatrix embed_pair(int d, int n, const DenseMatrix& u, int first, int second);

// Dense single-qudit forms of the corrections, built from their definitions.
DenseMatrix qft_matrix(int d);
DenseMatrix xor_matrix(int d);
DenseMatrix bob1_correction_matrix(int d, int l, int m);
DenseMatrix relabel_matrix(int d, int m);
DenseMatrix phase_matrix(int d, long long k);

struct DenseBranch {
  std::vector<cx> state;
  double probability;
};

/// Projection by scanning all indices; drops measured qudits, renormalizes.
DenseBranch dense_collapse(int d, int n, const std::vector<cx>& state,
                           const std::vector<int>& targets, const Digits& outcome);

struct DenseCheckReport {
  int d = 0;
  int n = 0;
  ReconstructionMode mode = ReconstructionMode::kSequential;
  std::size_t branches = 0;
  double min_fidelity = 1.0;
  double max_fidelity = 0.0;
  std::map<Digits, double> split_probabilities;
  double max_split_probability_error = 0.0;           // vs 1/d²
  double max_reconstruction_probability_error = 0.0;  // per measurement vs its uniform value
  double max_universality_deviation = 0.0;            // corrected branch vs Σ α_k |k>^{⊗N}
  double max_fast_path_deviation = 0.0;

  bool passed() const;
};

/// Exhaustive sweep over every (l, m) and every reconstruction outcome tuple.
/// Throws CapExceeded when d^{N+2} > cap.
DenseCheckReport dense_protocol_check(const SecretAmplitudes& secret, int n,
                                      ReconstructionMode mode,
                                      std::size_t cap = kDefaultOracleCap);

struct QubitFixtureReport {
  cx a;
  cx b;
  int checks = 0;
  double max_deviation = 0.0;

  bool passed() const { return max_deviation <= kAlgebraTol; }
};

/// d = 2, N = 2 against the literal qubit states: the four Bell-outcome
/// branches a|00>+b|11>, a|11>+b|00>, a|00>−b|11>, a|11>−b|00>, and the
/// a|0>±b|1> states after Bob_2's Hadamard and measurement.
QubitFixtureReport qubit_fixture_check(cx a, cx b);

struct MarginalSweepReport {
  int d = 0;
  int n = 0;
  std::size_t subsets_checked = 0;
  double max_deviation = 0.0;         // density module vs expected
  double max_oracle_deviation = 0.0;  // brute-force partial trace vs expected

  bool passed() const {
    return max_deviation <= kAlgebraTol && max_oracle_deviation <= kAlgebraTol;
  }
};

/// Every K in 2..N, every nonempty strict subset of the K holders.
MarginalSweepReport marginal_sweep(const SecretAmplitudes& secret, int n,
                                   std::size_t cap = kDefaultOracleCap);

/// Fixed secrets used by sweeps: two basis states, the uniform state and a
/// phase ramp with unequal magnitudes.
std::vector<SecretAmplitudes> reference_secrets(int d);

}  // namespace qsplit::oracle
