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

#include "maxeven/rounding.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "maxeven/half_integral.hpp"

namespace maxeven {

BoolAssignment randomized_round(const TernaryAssignment& ternary, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int8_t> values = ternary.values();
  for (std::int8_t& v : values) {
    if (v == 0) v = (rng() & 1) ? 1 : -1;
  }
  return BoolAssignment(std::move(values));
}

Rational expected_weak_count(const Instance& inst, const TernaryAssignment& ternary,
                             int zero_cap) {
  validate(inst);
  if (ternary.size() != inst.num_vars) {
    throw std::invalid_argument("expected_weak_count: assignment size mismatch");
  }
  if (!is_normalized(inst)) {
    throw std::invalid_argument("expected_weak_count: instance must be normalized");
  }
  const int zeros = ternary.zero_count();
  if (zeros > zero_cap) {
    throw CapExceeded("expected_weak_count: " + std::to_string(zeros) +
                      " free variables exceed cap " + std::to_string(zero_cap));
  }

  // Twice the expectation is an integer: 2 for a satisfied fixed clause,
  // 1 for any clause containing a free variable.
  long long twice = 0;
  for (const Clause& clause : inst.clauses) {
    int product = 1;
    bool free_var = false;
    for (const Literal& lit : clause.literals) {
      const int v = ternary(lit.var);
      if (v == 0) {
        free_var = true;
        break;
      }
      product *= lit.sign * v;
    }
    if (free_var) {
      twice += 1;
    } else if (product == 1) {
      twice += 2;
    }
  }
  return Rational(twice, 2);
}

Solution derandomized_round(const Instance& inst, const TernaryAssignment& ternary) {
  validate(inst);
  if (ternary.size() != inst.num_vars) {
    throw std::invalid_argument("derandomized_round: assignment size mismatch");
  }
  if (!is_normalized(inst)) {
    throw std::invalid_argument("derandomized_round: instance must be normalized");
  }

  // Per-clause running state: product over fixed literals and the number of
  // still-free variables.
  const std::size_t m = inst.clauses.size();
  std::vector<int> product(m, 1);
  std::vector<int> free_vars(m, 0);
  std::vector<std::vector<std::pair<std::size_t, int>>> occurrences(
      static_cast<std::size_t>(inst.num_vars));  // var -> (clause, sign)
  for (std::size_t i = 0; i < m; ++i) {
    for (const Literal& lit : inst.clauses[i].literals) {
      const int v = ternary(lit.var);
      if (v == 0) {
        ++free_vars[i];
        occurrences[static_cast<std::size_t>(lit.var - 1)].emplace_back(i, lit.sign);
      } else {
        product[i] *= lit.sign * v;
      }
    }
  }

  std::vector<std::int8_t> values = ternary.values();
  for (int var = 1; var <= inst.num_vars; ++var) {
    if (values[static_cast<std::size_t>(var - 1)] != 0) continue;
    // Clauses where this is the last free variable are decided now; pick
    // the sign satisfying the most of them.
    int plus_votes = 0;
    int minus_votes = 0;
    for (const auto& [clause, sign] : occurrences[static_cast<std::size_t>(var - 1)]) {
      if (free_vars[clause] != 1) continue;
      (product[clause] * sign == 1 ? plus_votes : minus_votes) += 1;
    }
    const int chosen = plus_votes >= minus_votes ? 1 : -1;
    values[static_cast<std::size_t>(var - 1)] = static_cast<std::int8_t>(chosen);
    for (const auto& [clause, sign] : occurrences[static_cast<std::size_t>(var - 1)]) {
      product[clause] *= sign * chosen;
      --free_vars[clause];
    }
  }

  Solution solution;
  solution.assignment = BoolAssignment(std::move(values));
  solution.weak_count = weak_count(inst, solution.assignment);
  solution.lp_value = objective_value(inst, ternary);
  solution.ternary = ternary;
  return solution;
}

Solution solve_max_and_even(const Instance& inst) {
  validate(inst);
  auto [normalized, report] = normalize(inst);
  HalfIntegralResult relaxed = half_integral_solve(normalized);
  Solution solution = derandomized_round(normalized, relaxed.assignment);
  // Report the count over every original clause; excluded tautologies can
  // only add to the count the guarantee is stated for.
  solution.weak_count = weak_count(inst, solution.assignment);
  solution.lp_value = relaxed.lp_value;
  return solution;
}

}  // namespace maxeven
