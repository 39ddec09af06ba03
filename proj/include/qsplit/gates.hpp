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

#include "qsplit/operator.hpp"
#include "qsplit/register.hpp"

namespace qsplit {

/// exp(i 2π power / d), with power reduced mod d before the division.
cx root_of_unity(int d, long long power);

/// Entry (k, j) = exp(i 2π jk / d) / √d.
Operator qft_operator(int d);

/// d² x d² permutation |j>|k> -> |j>|k+j mod d>, control as the first factor.
Operator xor_operator(int d);

QuditRegister qft_apply(QuditRegister reg, int position);
QuditRegister xor_apply(QuditRegister reg, int control, int target);

// Corrections run as digit permutations with diagonal phases, never as
// dense matrices. The oracle rebuilds the dense forms independently.

/// |r> -> exp(−i 2π kl / d) |k>, k = (m − r) mod d.
QuditRegister bob1_correction(QuditRegister reg, int target, int l, int m);

/// |r> -> |(m − r) mod d>.
QuditRegister bob_mu_correction(QuditRegister reg, int target, int m);

/// |j> -> exp(−i 2π j k / d) |j>.
QuditRegister phase_correction(QuditRegister reg, int target, int k);

/// phase_correction by k_sum mod d; the sum of several outcomes in one shot.
QuditRegister aggregated_phase_correction(QuditRegister reg, int target, long long k_sum);

}  // namespace qsplit
