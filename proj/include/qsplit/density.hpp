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

#include <cstddef>
#include <span>
#include <vector>

#include "qsplit/register.hpp"

namespace qsplit {

/// Reduced state of k qudits: d^k x d^k, row-major.
class DensityMatrix {
 public:
  DensityMatrix(int d, int k, std::vector<cx> entries);

  int dim() const { return d_; }
  int qudits() const { return k_; }
  std::size_t size() const { return size_; }
  std::span<const cx> entries() const { return entries_; }

  cx operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }

  cx trace() const;
  /// max |ρ − ρ†|.
  double hermiticity_defect() const;

 private:
  int d_;
  int k_;
  std::size_t size_;
  std::vector<cx> entries_;
};

/// Partial trace over every position not in keep, straight from the
/// statevector. Kept digits are ordered as listed.
DensityMatrix reduced_density(const QuditRegister& reg, std::span<const int> keep);

bool is_diagonal(const DensityMatrix& rho, double tol = kAlgebraTol);

/// Σ_k |α_k|² |k><k|.
DensityMatrix expected_marginal(const SecretAmplitudes& alphas);

/// Σ_k |α_k|² |k…k><k…k| over `parties` qudits: the marginal any proper
/// subset of a Σ α_k |k>^{⊗K} holder group sees.
DensityMatrix expected_subset_marginal(const SecretAmplitudes& alphas, int parties);

double max_entry_deviation(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace qsplit
