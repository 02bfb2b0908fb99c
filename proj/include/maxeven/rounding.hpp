// Copyright 2026 The maxeven authors
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

#include <cstdint>
#include <optional>

#include "maxeven/core.hpp"
#include "maxeven/rational.hpp"

namespace maxeven {

/// A full +-1 assignment with its certificate data. For solutions produced
/// by derandomized_round / solve_max_and_even, weak_count >= ceil(lp_value).
struct Solution {
  BoolAssignment assignment;
  long long weak_count = 0;
  Rational lp_value;
  std::optional<long long> promise_note;  // oracle bound, filled in by verify
  TernaryAssignment ternary;              // the relaxation optimum that was rounded
};

/// Copies the +-1 entries and draws each 0 entry uniformly from a seeded
/// mt19937-64, one draw per zero in ascending variable order.
BoolAssignment randomized_round(const TernaryAssignment& ternary, std::uint64_t seed);

/// Exact expectation of weak_count under randomized_round, over all 2^z
/// completions of the z zero entries. Closed form per clause: 1 or 0 when
/// fully fixed (by the sign of the product), 1/2 when any variable is free.
/// The 1/2 case needs each variable to occur at most once per clause, hence
/// the normalization requirement. Throws CapExceeded when z > zero_cap.
Rational expected_weak_count(const Instance& normalized, const TernaryAssignment& ternary,
                             int zero_cap = 20);

/// Conditional-expectation derandomization. Fixed entries are copied; free
/// variables are set in ascending id order, each to the sign satisfying the
/// majority of the clauses in which it is the last free variable (ties to
/// +1). The result weakly satisfies at least expected_weak_count(...) many
/// clauses, hence at least ceil of the relaxation value.
Solution derandomized_round(const Instance& normalized, const TernaryAssignment& ternary);

/// Complete pipeline: normalize, solve the relaxation over {-1,0,+1},
/// derandomize. The reported weak_count is over all original clauses,
/// excluded tautologies included, and satisfies
///   weak_count >= ceil(lp_value) >= max strong count.
Solution solve_max_and_even(const Instance& inst);

}  // namespace maxeven
