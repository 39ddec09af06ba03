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

#include "qsplit/common.hpp"

namespace qsplit {

/// Dense complex square matrix, row-major. Acts on one or two qudits.
class Operator {
 public:
  Operator(std::size_t dim, std::vector<cx> entries);

  static Operator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::span<const cx> entries() const { return entries_; }

  cx operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

  Operator adjoint() const;
  Operator operator*(const Operator& rhs) const;

  /// max |U†U − I| over all entries.
  double unitarity_defect() const;
  bool is_unitary(double tol = kAlgebraTol) const { return unitarity_defect() <= tol; }

 private:
  std::size_t dim_;
  std::vector<cx> entries_;
};

/// max |a − b| over all entries; dims must agree.
double max_entry_deviation(const Operator& a, const Operator& b);

}  // namespace qsplit
