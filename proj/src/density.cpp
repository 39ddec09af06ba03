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
#include "qsplit/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsplit/kernels.hpp"

namespace qsplit {

DensityMatrix::DensityMatrix(int d, int k, std::vector<cx> entries)
    : d_(d), k_(k), size_(checked_length(d, k)), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) {
    throw std::invalid_argument("density matrix needs " + std::to_string(size_ * size_) +
                                " entries, got " + std::to_string(entries_.size()));
  }
}

cx DensityMatrix::trace() const {
  cx t = 0.0;
  for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

double DensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < size_; ++r)
    for (std::size_t c = r; c < size_; ++c)
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return worst;
}

DensityMatrix reduced_density(const QuditRegister& reg, std::span<const int> keep) {
  if (keep.empty()) throw std::invalid_argument("reduced_density: keep set is empty");
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= reg.qudits()) {
      throw std::out_of_range("reduced_density: position " + std::to_string(keep[i]) +
                              " outside [0, " + std::to_string(reg.qudits()) + ")");
    }
    for (std::size_t j = 0; j < i; ++j)
      if (keep[i] == keep[j]) throw std::invalid_argument("reduced_density: repeated position");
  }
  auto rho = kernels::parallel::partial_trace({reg.dim(), reg.qudits()}, reg.amplitudes(), keep);
  return DensityMatrix(reg.dim(), static_cast<int>(keep.size()), std::move(rho));
}

bool is_diagonal(const DensityMatrix& rho, double tol) {
  for (std::size_t r = 0; r < rho.size(); ++r)
    for (std::size_t c = 0; c < rho.size(); ++c)
      if (r != c && std::abs(rho(r, c)) > tol) return false;
  return true;
}

DensityMatrix expected_marginal(const SecretAmplitudes& alphas) {
  return expected_subset_marginal(alphas, 1);
}

DensityMatrix expected_subset_marginal(const SecretAmplitudes& alphas, int parties) {
  const int d = alphas.dim();
  const std::size_t size = checked_length(d, parties);
  std::vector<cx> e(size * size);
  for (int k = 0; k < d; ++k) {
    const Digits digits(static_cast<std::size_t>(parties), k);
    const std::size_t i = index_of_digits(d, digits);
    e[i * size + i] = std::norm(alphas[k]);
  }
  return DensityMatrix(d, parties, std::move(e));
}

double max_entry_deviation(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim() || a.qudits() != b.qudits()) {
    throw std::invalid_argument("density matrix shape mismatch");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

}  // namespace qsplit
