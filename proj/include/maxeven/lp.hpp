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

#include <string>
#include <vector>

#include "maxeven/core.hpp"
#include "maxeven/rational.hpp"

namespace maxeven {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// One inequality `coeffs . x <= rhs` with exactly num_vars coefficients.
struct LpConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
};

/// Maximization LP with a finite box per variable.
///
/// For LPs built from a clause instance the layout is fixed: the n
/// assignment variables c(x) first, then one auxiliary t per kept nonempty
/// clause. Since every variable carries finite bounds, a feasible LP is
/// never unbounded; kUnbounded exists for completeness of the general
/// solver entry point.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  std::vector<LpConstraint> constraints;
  std::vector<Rational> objective;
  Rational objective_constant;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> values;  // one per structural variable, when optimal
  Rational objective_value;      // objective . values + objective_constant
};

/// Builds the relaxation of a normalized instance: variables c(x) in
/// [-1,1], one auxiliary t_i in [-1,1] per kept nonempty clause, constraint
/// t_i - s c(x) <= 0 per literal occurrence, objective sum of 1/2 + t_i/2
/// plus 1 per empty clause. The t_i >= -1 bound does not change the
/// optimum (each t_i is dominated by a min of [-1,1] values) and keeps the
/// box finite. Throws std::invalid_argument if the instance is not
/// normalized.
LinearProgram build_lp(const Instance& normalized);

/// Bounded-variable primal simplex over exact rationals. Bounds are handled
/// natively rather than as extra rows; pivoting uses Bland's smallest-index
/// rule, so the solve always terminates. A phase-1 pass with artificial
/// variables runs only when the initial slack basis is infeasible (never
/// the case for build_lp outputs). The returned vertex satisfies every
/// bound and constraint exactly; there are no tolerances.
LpSolution simplex_solve(const LinearProgram& lp);

/// Plain-text dump, one line per constraint, every number rendered "p/q".
/// Debugging aid only, not a compatibility surface.
std::string lp_to_string(const LinearProgram& lp);

}  // namespace maxeven
