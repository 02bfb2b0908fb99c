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

#include "maxeven/core.hpp"

#include <algorithm>
#include <string>

namespace maxeven {

namespace {

void check_var_range(int var, int num_vars) {
  if (var < 1 || var > num_vars) {
    throw std::out_of_range("variable " + std::to_string(var) +
                            " out of range [1, " + std::to_string(num_vars) + "]");
  }
}

}  // namespace

void validate(const Instance& inst) {
  if (inst.num_vars < 0) throw std::invalid_argument("negative variable count");
  for (const Clause& clause : inst.clauses) {
    for (const Literal& lit : clause.literals) {
      check_var_range(lit.var, inst.num_vars);
      if (lit.sign != 1 && lit.sign != -1) {
        throw std::invalid_argument("literal sign must be -1 or +1");
      }
    }
  }
}

BoolAssignment::BoolAssignment(std::vector<std::int8_t> values)
    : values_(std::move(values)) {
  for (std::int8_t v : values_) {
    if (v != 1 && v != -1) throw std::invalid_argument("Boolean value must be -1 or +1");
  }
}

BoolAssignment BoolAssignment::from_mask(int n, std::uint64_t mask) {
  std::vector<std::int8_t> vals(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    vals[static_cast<std::size_t>(v)] = (mask >> v) & 1 ? 1 : -1;
  }
  return BoolAssignment(std::move(vals));
}

int BoolAssignment::operator()(int var) const {
  check_var_range(var, size());
  return values_[static_cast<std::size_t>(var - 1)];
}

TernaryAssignment BoolAssignment::to_ternary() const {
  return TernaryAssignment(values_);
}

TernaryAssignment::TernaryAssignment(std::vector<std::int8_t> values)
    : values_(std::move(values)) {
  for (std::int8_t v : values_) {
    if (v < -1 || v > 1) throw std::invalid_argument("ternary value must be -1, 0 or +1");
  }
}

int TernaryAssignment::operator()(int var) const {
  check_var_range(var, size());
  return values_[static_cast<std::size_t>(var - 1)];
}

int TernaryAssignment::zero_count() const {
  return static_cast<int>(std::count(values_.begin(), values_.end(), std::int8_t{0}));
}

bool strong_satisfied(const Clause& clause, const BoolAssignment& a) {
  for (const Literal& lit : clause.literals) {
    if (lit.sign * a(lit.var) != 1) return false;
  }
  return true;
}

bool weak_satisfied(const Clause& clause, const BoolAssignment& a) {
  int false_literals = 0;
  for (const Literal& lit : clause.literals) {
    if (lit.sign * a(lit.var) == -1) ++false_literals;
  }
  return false_literals % 2 == 0;
}

int clause_min(const Clause& clause, const TernaryAssignment& t) {
  if (clause.empty()) {
    throw std::invalid_argument("clause_min: empty clause has no minimum");
  }
  int best = 2;
  for (const Literal& lit : clause.literals) {
    best = std::min(best, lit.sign * t(lit.var));
    if (best == -1) break;
  }
  return best;
}

Rational objective_value(const Instance& inst, const TernaryAssignment& t) {
  // Every clause contributes (1 + min)/2, so twice the objective is an
  // integer we can accumulate directly.
  long long twice = 0;
  for (const Clause& clause : inst.clauses) {
    twice += clause.empty() ? 2 : 1 + clause_min(clause, t);
  }
  return Rational(twice, 2);
}

Rational objective_value(const Instance& inst, const std::vector<Rational>& point) {
  if (point.size() != static_cast<std::size_t>(inst.num_vars)) {
    throw std::invalid_argument("objective_value: point size mismatch");
  }
  const Rational half(1, 2);
  Rational total;
  for (const Clause& clause : inst.clauses) {
    if (clause.empty()) {
      total += Rational(1);
      continue;
    }
    bool first = true;
    Rational mn;
    for (const Literal& lit : clause.literals) {
      check_var_range(lit.var, inst.num_vars);
      Rational v = point[static_cast<std::size_t>(lit.var - 1)];
      if (lit.sign < 0) v = -v;
      if (first || v < mn) {
        mn = std::move(v);
        first = false;
      }
    }
    total += half + half * mn;
  }
  return total;
}

long long strong_count(const Instance& inst, const BoolAssignment& a) {
  long long count = 0;
  for (const Clause& clause : inst.clauses) {
    if (strong_satisfied(clause, a)) ++count;
  }
  return count;
}

long long weak_count(const Instance& inst, const BoolAssignment& a) {
  long long count = 0;
  for (const Clause& clause : inst.clauses) {
    if (weak_satisfied(clause, a)) ++count;
  }
  return count;
}

std::pair<Instance, NormalizationReport> normalize(const Instance& inst) {
  validate(inst);
  Instance out;
  out.num_vars = inst.num_vars;
  NormalizationReport report;
  report.pair_removals.assign(inst.clauses.size(), 0);

  for (std::size_t i = 0; i < inst.clauses.size(); ++i) {
    const std::vector<Literal>& lits = inst.clauses[i].literals;

    bool tautological = false;
    for (std::size_t j = 0; j < lits.size() && !tautological; ++j) {
      for (std::size_t k = j + 1; k < lits.size(); ++k) {
        if (lits[j].var == lits[k].var && lits[j].sign != lits[k].sign) {
          tautological = true;
          break;
        }
      }
    }
    if (tautological) {
      report.excluded_tautologies.push_back(i);
      continue;
    }

    // All occurrences of a variable now share one sign; keep one literal per
    // odd occurrence count, in first-occurrence order.
    Clause kept;
    int pairs = 0;
    std::vector<char> used(lits.size(), 0);
    for (std::size_t j = 0; j < lits.size(); ++j) {
      if (used[j]) continue;
      int occurrences = 0;
      for (std::size_t k = j; k < lits.size(); ++k) {
        if (lits[k] == lits[j]) {
          used[k] = 1;
          ++occurrences;
        }
      }
      pairs += occurrences / 2;
      if (occurrences % 2 == 1) kept.literals.push_back(lits[j]);
    }
    report.pair_removals[i] = pairs;
    report.kept.push_back(i);
    if (kept.empty()) report.empty_clauses.push_back(i);
    out.clauses.push_back(std::move(kept));
  }
  return {std::move(out), std::move(report)};
}

bool is_normalized(const Instance& inst) {
  for (const Clause& clause : inst.clauses) {
    const std::vector<Literal>& lits = clause.literals;
    for (std::size_t j = 0; j < lits.size(); ++j) {
      for (std::size_t k = j + 1; k < lits.size(); ++k) {
        if (lits[j].var == lits[k].var) return false;
      }
    }
  }
  return true;
}

}  // namespace maxeven
