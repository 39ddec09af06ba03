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
#include <algorithm>
#include <stdexcept>
#include <string>

#include "qsplit/kernels.hpp"
#include "qsplit/register.hpp"

namespace qsplit::kernels {

std::vector<std::size_t> offset_table(Layout layout, std::span<const int> positions) {
  std::vector<std::size_t> table{0};
  for (int p : positions) {
    const std::size_t stride = stride_of(layout.d, layout.n, p);
    std::vector<std::size_t> next;
    next.reserve(table.size() * static_cast<std::size_t>(layout.d));
    for (std::size_t base : table)
      for (int digit = 0; digit < layout.d; ++digit)
        next.push_back(base + static_cast<std::size_t>(digit) * stride);
    table = std::move(next);
  }
  return table;
}

std::vector<int> complement(Layout layout, std::span<const int> positions) {
  std::vector<int> rest;
  for (int p = 0; p < layout.n; ++p)
    if (std::find(positions.begin(), positions.end(), p) == positions.end()) rest.push_back(p);
  return rest;
}

}  // namespace qsplit::kernels
