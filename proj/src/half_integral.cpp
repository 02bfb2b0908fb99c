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

#include "maxeven/half_integral.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace maxeven {

namespace {

void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("half_integral: ") + what);
}

std::vector<int> rank_of_var(const std::vector<int>& order) {
  std::vector<int> rank(order.size() + 1, -1);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const int var = order[r];
    if (var < 1 || var > static_cast<int>(order.size()) || rank[var] != -1) {
      throw std::invalid_argument("order is not a permutation of 1..n");
    }
    rank[var] = static_cast<int>(r);
  }
  return rank;
}

}  // namespace

FlipResult flip_signs(const Instance& inst, const std::vector<Rational>& point) {
  validate(inst);
  if (point.size() != static_cast<std::size_t>(inst.num_vars)) {
    throw std::invalid_argument("flip_signs: point size mismatch");
  }
  const Rational one(1);
  for (const Rational& v : point) {
    if (v < -one || v > one) throw std::invalid_argument("flip_signs: entry outside [-1,1]");
  }

  FlipResult out;
  out.flip.sigma.resize(point.size());
  out.values.resize(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) {
    out.flip.sigma[i] = point[i].sign() < 0 ? -1 : 1;
    out.values[i] = point[i].abs();
  }
  out.instance.num_vars = inst.num_vars;
  out.instance.clauses.reserve(inst.clauses.size());
  for (const Clause& clause : inst.clauses) {
    Clause flipped;
    flipped.literals.reserve(clause.size());
    for (const Literal& lit : clause.literals) {
      flipped.literals.push_back({lit.var, lit.sign * out.flip(lit.var)});
    }
    out.instance.clauses.push_back(std::move(flipped));
  }
  return out;
}

std::vector<int> sorted_order(const std::vector<Rational>& point) {
  for (const Rational& v : point) {
    if (v.sign() < 0) throw std::invalid_argument("sorted_order: negative entry");
  }
  std::vector<int> order(point.size());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&point](int a, int b) {
    const int c = compare(point[static_cast<std::size_t>(a - 1)],
                          point[static_cast<std::size_t>(b - 1)]);
    return c != 0 ? c < 0 : a < b;
  });
  return order;
}

std::size_t select_argmin(const Clause& clause, const std::vector<int>& ranks) {
  if (clause.empty()) {
    throw std::invalid_argument("select_argmin: empty clause");
  }
  std::size_t best = AffineForm::kNoLiteral;
  // Negative literals: value -c(x) falls as rank rises, so the largest rank
  // attains the minimum.
  for (std::size_t j = 0; j < clause.size(); ++j) {
    const Literal& lit = clause.literals[j];
    if (lit.sign > 0) continue;
    if (best == AffineForm::kNoLiteral ||
        ranks[lit.var] > ranks[clause.literals[best].var]) {
      best = j;
    }
  }
  if (best != AffineForm::kNoLiteral) return best;
  for (std::size_t j = 0; j < clause.size(); ++j) {
    const Literal& lit = clause.literals[j];
    if (best == AffineForm::kNoLiteral ||
        ranks[lit.var] < ranks[clause.literals[best].var]) {
      best = j;
    }
  }
  return best;
}

Rational AffineForm::evaluate(const std::vector<Rational>& point) const {
  Rational total = constant;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!coefficients[i].is_zero()) total += coefficients[i] * point[i];
  }
  return total;
}

AffineForm affine_form(const Instance& inst, const std::vector<int>& order) {
  validate(inst);
  if (order.size() != static_cast<std::size_t>(inst.num_vars)) {
    throw std::invalid_argument("affine_form: order size mismatch");
  }
  const std::vector<int> ranks = rank_of_var(order);

  AffineForm form;
  form.coefficients.assign(static_cast<std::size_t>(inst.num_vars), Rational(0));
  form.selector.reserve(inst.clauses.size());
  for (const Clause& clause : inst.clauses) {
    if (clause.empty()) {
      form.selector.push_back(AffineForm::kNoLiteral);
      form.constant += Rational(1);
      continue;
    }
    const std::size_t j = select_argmin(clause, ranks);
    form.selector.push_back(j);
    form.constant += Rational(1, 2);
    const Literal& lit = clause.literals[j];
    form.coefficients[static_cast<std::size_t>(lit.var - 1)] += Rational(lit.sign, 2);
  }
  return form;
}

std::vector<Rational> collapse_blocks(std::vector<Rational> point, const Instance& inst) {
  if (point.size() != static_cast<std::size_t>(inst.num_vars)) {
    throw std::invalid_argument("collapse_blocks: point size mismatch");
  }
  const Rational zero(0);
  const Rational one(1);
  for (const Rational& v : point) {
    if (v < zero || v > one) {
      throw std::invalid_argument("collapse_blocks: entry outside [0,1]");
    }
  }

  const Rational target = objective_value(inst, point);

  // Each round removes one value from the image, so n rounds suffice.
  for (int round = 0; round <= inst.num_vars; ++round) {
    const Rational* lowest = nullptr;
    for (const Rational& v : point) {
      if (v.sign() > 0 && (lowest == nullptr || v < *lowest)) lowest = &v;
    }
    if (lowest == nullptr || *lowest == one) {
      internal_check(objective_value(inst, point) == target,
                     "objective moved during collapse");
      return point;
    }
    internal_check(round < inst.num_vars, "collapse failed to terminate");

    const std::vector<int> order = sorted_order(point);
    const AffineForm form = affine_form(inst, order);
    internal_check(form.evaluate(point) == objective_value(inst, point),
                   "affine form disagrees with the objective");

    const Rational block_value = *lowest;
    Rational coefficient_sum;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (point[i] == block_value) coefficient_sum += form.coefficients[i];
    }
    if (!coefficient_sum.is_zero()) {
      throw std::logic_error(
          "collapse_blocks: block coefficient sum is nonzero; input was not "
          "an optimum of the relaxation");
    }
    for (Rational& v : point) {
      if (v == block_value) v = zero;
    }

    // The point must stay sorted under the order used this round.
    for (std::size_t r = 1; r < order.size(); ++r) {
      internal_check(point[static_cast<std::size_t>(order[r - 1] - 1)] <=
                         point[static_cast<std::size_t>(order[r] - 1)],
                     "collapse broke the sorted order");
    }
  }
  internal_check(false, "collapse failed to terminate");
  return point;  // unreachable
}

HalfIntegralResult half_integral_solve(const Instance& inst) {
  if (!is_normalized(inst)) {
    throw std::invalid_argument("half_integral_solve: instance must be normalized");
  }
  const LinearProgram lp = build_lp(inst);
  LpSolution sol = simplex_solve(lp);
  internal_check(sol.status == LpStatus::kOptimal,
                 "clause relaxations are always feasible and bounded");

  // Tighten each auxiliary to the clause minimum it tracks. At an optimum
  // the auxiliaries are already tight (their objective coefficients are
  // positive), so this must not change the objective.
  int aux = inst.num_vars;
  for (const Clause& clause : inst.clauses) {
    if (clause.empty()) continue;
    bool first = true;
    Rational mn;
    for (const Literal& lit : clause.literals) {
      Rational v = sol.values[static_cast<std::size_t>(lit.var - 1)];
      if (lit.sign < 0) v = -v;
      if (first || v < mn) {
        mn = std::move(v);
        first = false;
      }
    }
    internal_check(sol.values[static_cast<std::size_t>(aux)] <= mn,
                   "auxiliary exceeds its clause minimum");
    sol.values[static_cast<std::size_t>(aux)] = std::move(mn);
    ++aux;
  }
  Rational retotal = lp.objective_constant;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.objective[j].is_zero()) retotal += lp.objective[j] * sol.values[j];
  }
  internal_check(retotal == sol.objective_value, "tightening changed the objective");

  std::vector<Rational> c(sol.values.begin(), sol.values.begin() + inst.num_vars);
  internal_check(objective_value(inst, c) == sol.objective_value,
                 "relaxation value disagrees with the solver");

  FlipResult flipped = flip_signs(inst, c);
  const std::vector<Rational> collapsed =
      collapse_blocks(std::move(flipped.values), flipped.instance);

  std::vector<std::int8_t> ternary(collapsed.size());
  const Rational one(1);
  for (std::size_t i = 0; i < collapsed.size(); ++i) {
    internal_check(collapsed[i].is_zero() || collapsed[i] == one,
                   "collapse left a fractional value");
    ternary[i] = collapsed[i].is_zero()
                     ? std::int8_t{0}
                     : static_cast<std::int8_t>(flipped.flip.sigma[i]);
  }

  HalfIntegralResult result;
  result.assignment = TernaryAssignment(std::move(ternary));
  result.lp_value = sol.objective_value;
  result.lp_solution = std::move(sol);
  internal_check(objective_value(inst, result.assignment) == result.lp_value,
                 "ternary assignment lost objective value");
  return result;
}

}  // namespace maxeven
