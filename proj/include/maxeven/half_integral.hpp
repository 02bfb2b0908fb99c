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

#include <cstddef>
#include <vector>

#include "maxeven/core.hpp"
#include "maxeven/lp.hpp"
#include "maxeven/rational.hpp"

namespace maxeven {

/// Per-variable sign flip; sigma[v-1] is -1 or +1.
struct SignFlip {
  std::vector<std::int8_t> sigma;

  int operator()(int var) const { return sigma.at(static_cast<std::size_t>(var - 1)); }
};

/// An instance together with a point, rewritten so the point is entrywise
/// nonnegative. Applying the flip to both the literal signs and the point
/// leaves the objective unchanged at every point.
struct FlipResult {
  Instance instance;
  SignFlip flip;
  std::vector<Rational> values;
};

/// Flips the sign of every literal whose variable has a negative value.
/// `point` entries must lie in [-1, 1].
FlipResult flip_signs(const Instance& inst, const std::vector<Rational>& point);

/// Variable ids 1..n sorted ascending by value; equal values are ordered by
/// variable id. Entries must be nonnegative.
std::vector<int> sorted_order(const std::vector<Rational>& point);

/// Index of the literal attaining the clause minimum on the sorted region:
/// with at least one negative literal it is the negative literal whose
/// variable ranks largest; with all signs positive it is the literal whose
/// variable ranks smallest. `rank_of_var` maps var id -> rank (position in
/// sorted_order). Throws std::invalid_argument on an empty clause.
std::size_t select_argmin(const Clause& clause, const std::vector<int>& rank_of_var);

/// The objective written as an affine function of the point, valid on the
/// whole region where the point stays nonnegative and sorted by `order`:
/// one selected literal per nonempty clause contributes sign/2 to its
/// variable's coefficient, and each clause contributes 1/2 (empty: 1) to
/// the constant.
struct AffineForm {
  static constexpr std::size_t kNoLiteral = static_cast<std::size_t>(-1);

  Rational constant;
  std::vector<Rational> coefficients;  // per variable
  std::vector<std::size_t> selector;   // per clause; kNoLiteral for empty clauses

  Rational evaluate(const std::vector<Rational>& point) const;
};

AffineForm affine_form(const Instance& inst, const std::vector<int>& order);

/// Repeatedly zeroes the lowest group of equal positive values until the
/// point lies in {0,1}^n. The group's coefficient sum in the recomputed
/// affine form must be exactly zero each round -- guaranteed when `point`
/// is optimal for the relaxation of `inst` -- so the objective never moves.
/// Throws std::logic_error if a nonzero coefficient sum shows up.
/// `inst` must already be sign-flipped so that `point` is nonnegative (and
/// at most 1 in every entry).
std::vector<Rational> collapse_blocks(std::vector<Rational> point, const Instance& inst);

struct HalfIntegralResult {
  TernaryAssignment assignment;
  Rational lp_value;
  LpSolution lp_solution;  // tightened relaxation optimum, for inspection
};

/// Exact optimum of the objective over {-1,0,+1}^n for a normalized
/// instance: build_lp -> simplex_solve -> tighten the auxiliaries ->
/// flip_signs -> collapse_blocks -> undo the flip. The returned assignment
/// attains lp_value exactly.
HalfIntegralResult half_integral_solve(const Instance& normalized);

}  // namespace maxeven
