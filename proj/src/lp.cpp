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

#include "maxeven/lp.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace maxeven {

namespace {

constexpr int kNoRow = -1;

void internal_check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("simplex: ") + what);
}

void validate_lp(const LinearProgram& lp) {
  const auto n = static_cast<std::size_t>(lp.num_vars);
  if (lp.num_vars < 0 || lp.lower.size() != n || lp.upper.size() != n ||
      lp.objective.size() != n) {
    throw std::invalid_argument("simplex_solve: inconsistent variable layout");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (lp.lower[j] > lp.upper[j]) {
      throw std::invalid_argument("simplex_solve: lower bound above upper bound");
    }
  }
  for (const LpConstraint& c : lp.constraints) {
    if (c.coeffs.size() != n) {
      throw std::invalid_argument("simplex_solve: constraint row length mismatch");
    }
  }
}

// Dense exact tableau. Columns are the structural variables, then one slack
// per row, then any phase-1 artificials. Every nonbasic column rests at one
// of its bounds; basic values are recomputed from the resting point each
// iteration, which keeps the state trivially consistent across pivots and
// bound flips.
class Simplex {
 public:
  explicit Simplex(const LinearProgram& lp) : lp_(lp) {
    rows_ = static_cast<int>(lp.constraints.size());
    structurals_ = lp.num_vars;
    cols_ = structurals_ + rows_;

    lo_.reserve(cols_);
    hi_.reserve(cols_);
    hi_finite_.reserve(cols_);
    for (int j = 0; j < structurals_; ++j) {
      lo_.push_back(lp.lower[j]);
      hi_.push_back(lp.upper[j]);
      hi_finite_.push_back(1);
    }
    for (int i = 0; i < rows_; ++i) {
      lo_.push_back(Rational(0));  // slack in [0, +inf)
      hi_.push_back(Rational(0));
      hi_finite_.push_back(0);
    }

    // Resting rule: each nonbasic structural variable starts at the bound
    // that minimizes its objective contribution (ties toward the upper
    // bound). For clause LPs this puts the auxiliaries at their lower bound
    // and the assignment variables at +1, which is always slack-feasible,
    // so those solves never need phase 1.
    rest_.assign(static_cast<std::size_t>(cols_), Rational(0));
    at_upper_.assign(static_cast<std::size_t>(cols_), 0);
    for (int j = 0; j < structurals_; ++j) {
      const bool up = lp.objective[j].sign() <= 0;
      rest_[j] = up ? hi_[j] : lo_[j];
      at_upper_[j] = up ? 1 : 0;
    }

    tab_.assign(static_cast<std::size_t>(rows_),
                std::vector<Rational>(static_cast<std::size_t>(cols_), Rational(0)));
    rhs_.assign(static_cast<std::size_t>(rows_), Rational(0));
    basic_.assign(static_cast<std::size_t>(rows_), 0);
    row_of_.assign(static_cast<std::size_t>(cols_), kNoRow);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < structurals_; ++j) tab_[i][j] = lp.constraints[i].coeffs[j];
      tab_[i][structurals_ + i] = Rational(1);
      rhs_[i] = lp.constraints[i].rhs;
      basic_[i] = structurals_ + i;
      row_of_[structurals_ + i] = i;
    }
  }

  LpStatus run() {
    first_artificial_ = cols_;
    add_artificials();
    if (cols_ > first_artificial_) {
      // Phase 1: maximize -(sum of artificials) until it reaches zero.
      cost_.assign(static_cast<std::size_t>(cols_), Rational(0));
      for (int j = first_artificial_; j < cols_; ++j) cost_[j] = Rational(-1);
      const LpStatus st = iterate();
      internal_check(st == LpStatus::kOptimal, "phase 1 cannot be unbounded");
      if (!phase1_value().is_zero()) return LpStatus::kInfeasible;
      retire_artificials();
    }

    cost_.assign(static_cast<std::size_t>(cols_), Rational(0));
    for (int j = 0; j < structurals_; ++j) cost_[j] = lp_.objective[j];
    return iterate();
  }

  std::vector<Rational> structural_values() const {
    const std::vector<Rational> beta = basic_values();
    std::vector<Rational> out(static_cast<std::size_t>(structurals_));
    for (int j = 0; j < structurals_; ++j) {
      out[j] = row_of_[j] == kNoRow ? rest_[j] : beta[row_of_[j]];
    }
    return out;
  }

 private:
  void add_artificials() {
    const std::vector<Rational> beta = basic_values();
    for (int i = 0; i < rows_; ++i) {
      if (beta[i].sign() >= 0) continue;
      // Negate the row so the incoming artificial column is +e_i; the old
      // slack becomes nonbasic at its lower bound 0.
      for (int j = 0; j < cols_; ++j) tab_[i][j] = -tab_[i][j];
      rhs_[i] = -rhs_[i];
      for (int r = 0; r < rows_; ++r) {
        tab_[r].push_back(r == i ? Rational(1) : Rational(0));
      }
      const int art = cols_++;
      lo_.push_back(Rational(0));
      hi_.push_back(Rational(0));
      hi_finite_.push_back(0);
      rest_.push_back(Rational(0));
      at_upper_.push_back(0);
      row_of_.push_back(i);
      row_of_[basic_[i]] = kNoRow;
      rest_[basic_[i]] = lo_[basic_[i]];
      at_upper_[basic_[i]] = 0;
      basic_[i] = art;
    }
  }

  Rational phase1_value() const {
    const std::vector<Rational> beta = basic_values();
    Rational total;
    for (int j = first_artificial_; j < cols_; ++j) {
      total -= row_of_[j] == kNoRow ? rest_[j] : beta[row_of_[j]];
    }
    return total;
  }

  // After a successful phase 1 every artificial sits at zero. Pivot basic
  // ones out where possible; a row that admits no pivot is redundant and
  // keeps its artificial pinned. All artificials end fixed at [0,0], which
  // bars them from ever re-entering.
  void retire_artificials() {
    for (int i = 0; i < rows_; ++i) {
      if (basic_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j) {
        if (row_of_[j] == kNoRow && !tab_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
    for (int j = first_artificial_; j < cols_; ++j) {
      hi_[j] = Rational(0);
      hi_finite_[j] = 1;
    }
  }

  std::vector<Rational> basic_values() const {
    std::vector<Rational> beta = rhs_;
    for (int j = 0; j < cols_; ++j) {
      if (row_of_[j] != kNoRow || rest_[j].is_zero()) continue;
      for (int i = 0; i < rows_; ++i) {
        if (!tab_[i][j].is_zero()) beta[i] -= tab_[i][j] * rest_[j];
      }
    }
    return beta;
  }

  std::vector<Rational> reduced_costs() const {
    std::vector<Rational> d = cost_;
    for (int i = 0; i < rows_; ++i) {
      const Rational& cb = cost_[basic_[i]];
      if (cb.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) {
        if (row_of_[j] == kNoRow && !tab_[i][j].is_zero()) d[j] -= cb * tab_[i][j];
      }
    }
    return d;
  }

  LpStatus iterate() {
    // Bland's rule: smallest eligible column enters; on ratio-test ties the
    // row whose basic variable has the smallest index leaves. Anti-cycling
    // therefore holds even at degenerate vertices. A tie between a row
    // limit and the entering variable's own range resolves to a bound flip,
    // which is safe: flips move by the full (positive) range and cannot be
    // part of a degenerate cycle.
    const long guard =
        100000L * (static_cast<long>(cols_) + static_cast<long>(rows_) + 1);
    for (long step = 0; step <= guard; ++step) {
      const std::vector<Rational> beta = basic_values();
      const std::vector<Rational> d = reduced_costs();

      int enter = -1;
      int dir = 0;
      for (int j = 0; j < cols_; ++j) {
        if (row_of_[j] != kNoRow) continue;
        if (hi_finite_[j] && lo_[j] == hi_[j]) continue;  // fixed
        if (!at_upper_[j] && d[j].sign() > 0) {
          enter = j;
          dir = +1;
          break;
        }
        if (at_upper_[j] && d[j].sign() < 0) {
          enter = j;
          dir = -1;
          break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;

      bool limited = false;
      Rational delta;
      int block = kNoRow;
      if (hi_finite_[enter]) {
        limited = true;
        delta = hi_[enter] - lo_[enter];
      }
      for (int i = 0; i < rows_; ++i) {
        const Rational& a = tab_[i][enter];
        if (a.is_zero()) continue;
        const int gsign = dir * a.sign();
        const int bv = basic_[i];
        Rational limit;
        if (gsign > 0) {
          limit = (beta[i] - lo_[bv]) / (dir > 0 ? a : -a);
        } else {
          if (!hi_finite_[bv]) continue;
          limit = (hi_[bv] - beta[i]) / (dir > 0 ? -a : a);
        }
        internal_check(limit.sign() >= 0, "negative ratio limit");
        if (!limited || limit < delta) {
          limited = true;
          delta = std::move(limit);
          block = i;
        } else if (block != kNoRow && limit == delta && basic_[i] < basic_[block]) {
          block = i;
        }
      }
      if (!limited) return LpStatus::kUnbounded;

      if (block == kNoRow) {
        at_upper_[enter] = at_upper_[enter] ? 0 : 1;
        rest_[enter] = at_upper_[enter] ? hi_[enter] : lo_[enter];
        continue;
      }

      const int leave = basic_[block];
      const int gsign = dir * tab_[block][enter].sign();
      at_upper_[leave] = gsign < 0 ? 1 : 0;
      rest_[leave] = gsign < 0 ? hi_[leave] : lo_[leave];
      pivot(block, enter);
    }
    internal_check(false, "iteration guard tripped");
    return LpStatus::kInfeasible;  // unreachable
  }

  void pivot(int row, int col) {
    const Rational p = tab_[row][col];
    internal_check(!p.is_zero(), "pivot on zero entry");
    const Rational inv = Rational(1) / p;
    for (int j = 0; j < cols_; ++j) {
      if (!tab_[row][j].is_zero()) tab_[row][j] *= inv;
    }
    rhs_[row] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const Rational f = tab_[i][col];
      if (f.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) {
        if (!tab_[row][j].is_zero()) tab_[i][j] -= f * tab_[row][j];
      }
      rhs_[i] -= f * rhs_[row];
    }
    row_of_[basic_[row]] = kNoRow;
    basic_[row] = col;
    row_of_[col] = row;
  }

  const LinearProgram& lp_;
  int rows_ = 0;
  int structurals_ = 0;
  int cols_ = 0;
  int first_artificial_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<Rational> lo_, hi_;
  std::vector<char> hi_finite_;
  std::vector<Rational> rest_;
  std::vector<char> at_upper_;
  std::vector<int> basic_;
  std::vector<int> row_of_;
  std::vector<Rational> cost_;
};

}  // namespace

LinearProgram build_lp(const Instance& inst) {
  validate(inst);
  if (!is_normalized(inst)) {
    throw std::invalid_argument("build_lp: instance must be normalized");
  }

  int nonempty = 0;
  int empty = 0;
  for (const Clause& clause : inst.clauses) {
    clause.empty() ? ++empty : ++nonempty;
  }

  LinearProgram lp;
  lp.num_vars = inst.num_vars + nonempty;
  lp.lower.assign(static_cast<std::size_t>(lp.num_vars), Rational(-1));
  lp.upper.assign(static_cast<std::size_t>(lp.num_vars), Rational(1));
  lp.objective.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
  lp.objective_constant = Rational(nonempty + 2LL * empty, 2);

  int aux = inst.num_vars;
  for (const Clause& clause : inst.clauses) {
    if (clause.empty()) continue;
    lp.objective[aux] = Rational(1, 2);
    for (const Literal& lit : clause.literals) {
      LpConstraint row;
      row.coeffs.assign(static_cast<std::size_t>(lp.num_vars), Rational(0));
      row.coeffs[aux] = Rational(1);
      row.coeffs[static_cast<std::size_t>(lit.var - 1)] = Rational(-lit.sign);
      row.rhs = Rational(0);
      lp.constraints.push_back(std::move(row));
    }
    ++aux;
  }
  return lp;
}

LpSolution simplex_solve(const LinearProgram& lp) {
  validate_lp(lp);

  Simplex solver(lp);
  const LpStatus status = solver.run();

  LpSolution solution;
  solution.status = status;
  if (status != LpStatus::kOptimal) return solution;

  solution.values = solver.structural_values();

  // Exact re-verification of the vertex; any failure here is a solver bug.
  for (int j = 0; j < lp.num_vars; ++j) {
    internal_check(lp.lower[j] <= solution.values[j] && solution.values[j] <= lp.upper[j],
                   "returned vertex violates a bound");
  }
  for (const LpConstraint& c : lp.constraints) {
    Rational lhs;
    for (int j = 0; j < lp.num_vars; ++j) {
      if (!c.coeffs[j].is_zero()) lhs += c.coeffs[j] * solution.values[j];
    }
    internal_check(lhs <= c.rhs, "returned vertex violates a constraint");
  }

  Rational obj = lp.objective_constant;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (!lp.objective[j].is_zero()) obj += lp.objective[j] * solution.values[j];
  }
  solution.objective_value = std::move(obj);
  return solution;
}

std::string lp_to_string(const LinearProgram& lp) {
  std::ostringstream os;
  os << "lp vars=" << lp.num_vars << " constraints=" << lp.constraints.size() << "\n";
  os << "maximize";
  for (const Rational& c : lp.objective) os << ' ' << c.str();
  os << " + " << lp.objective_constant.str() << "\n";
  os << "bounds";
  for (int j = 0; j < lp.num_vars; ++j) {
    os << ' ' << lp.lower[j].str() << ':' << lp.upper[j].str();
  }
  os << "\n";
  for (const LpConstraint& c : lp.constraints) {
    bool first = true;
    for (const Rational& a : c.coeffs) {
      os << (first ? "" : " ") << a.str();
      first = false;
    }
    os << " <= " << c.rhs.str() << "\n";
  }
  return os.str();
}

}  // namespace maxeven
