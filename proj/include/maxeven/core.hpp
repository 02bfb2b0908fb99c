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
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "maxeven/rational.hpp"

namespace maxeven {

/// Raised when a brute-force enumeration would exceed its configured cap.
/// Enumeration either runs exactly or refuses; it never truncates silently.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A signed variable: +x (sign +1) or -x (sign -1). Variables are 1-based.
struct Literal {
  int var = 1;
  int sign = 1;

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, +1}; }
inline Literal neg(int var) { return {var, -1}; }

/// A multiset of literals. Order and duplicates are preserved; repeated and
/// complementary literals are legal until normalize() runs.
struct Clause {
  std::vector<Literal> literals;

  bool empty() const { return literals.empty(); }
  std::size_t size() const { return literals.size(); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// A multiset of clauses over variables 1..num_vars. Clause identity is by
/// index; nothing is reordered or deduplicated on construction.
struct Instance {
  int num_vars = 0;
  std::vector<Clause> clauses;

  std::size_t num_clauses() const { return clauses.size(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws std::invalid_argument unless every literal references a variable
/// in [1, num_vars] with sign in {-1,+1}.
void validate(const Instance& inst);

class TernaryAssignment;

/// Total map from variables 1..n to {-1,+1}; +1 encodes true.
class BoolAssignment {
 public:
  BoolAssignment() = default;
  explicit BoolAssignment(std::vector<std::int8_t> values);

  /// Assignment number `mask` in binary counting order: bit (v-1) set means
  /// variable v is +1. Used by the oracles so that argmax witnesses are
  /// reproducible.
  static BoolAssignment from_mask(int n, std::uint64_t mask);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int var) const;
  const std::vector<std::int8_t>& values() const { return values_; }

  TernaryAssignment to_ternary() const;

  friend bool operator==(const BoolAssignment&, const BoolAssignment&) = default;

 private:
  std::vector<std::int8_t> values_;
};

/// Total map from variables 1..n to {-1,0,+1}.
class TernaryAssignment {
 public:
  TernaryAssignment() = default;
  explicit TernaryAssignment(std::vector<std::int8_t> values);

  int size() const { return static_cast<int>(values_.size()); }
  int operator()(int var) const;
  const std::vector<std::int8_t>& values() const { return values_; }

  int zero_count() const;

  friend bool operator==(const TernaryAssignment&, const TernaryAssignment&) = default;

 private:
  std::vector<std::int8_t> values_;
};

/// True iff no literal of `clause` evaluates to false. The empty clause is
/// strongly satisfied.
bool strong_satisfied(const Clause& clause, const BoolAssignment& a);

/// True iff an even number of literals evaluate to false; equivalently the
/// product of the literal values is +1 (empty product included).
bool weak_satisfied(const Clause& clause, const BoolAssignment& a);

/// min over literals of sign * t(var), a value in {-1,0,+1}. The empty
/// clause has no minimum; callers treat it as a constant +1 contribution.
/// Throws std::invalid_argument on an empty clause.
int clause_min(const Clause& clause, const TernaryAssignment& t);

/// Sum over clauses of 1/2 + 1/2 * clause_min, with empty clauses
/// contributing 1. This is the quantity the relaxation maximizes.
Rational objective_value(const Instance& inst, const TernaryAssignment& t);

/// Same objective evaluated at a fractional point in [-1,1]^n.
Rational objective_value(const Instance& inst, const std::vector<Rational>& point);

long long strong_count(const Instance& inst, const BoolAssignment& a);
long long weak_count(const Instance& inst, const BoolAssignment& a);

/// Record of what normalize() did. `kept` and `excluded_tautologies`
/// partition the original clause indices.
struct NormalizationReport {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> excluded_tautologies;
  std::vector<std::size_t> empty_clauses;  // subset of kept, emptied by cancellation
  std::vector<int> pair_removals;          // per original clause

  friend bool operator==(const NormalizationReport&, const NormalizationReport&) = default;
};

/// Two rewrite rules, applied per clause:
///   - a clause containing some variable with both signs is excluded
///     entirely (it can never be strongly satisfied);
///   - repeated identical literals cancel in pairs, which preserves weak
///     satisfaction under every assignment and can only help strong.
/// Kept clauses appear in input order; surviving literals keep the order of
/// their first occurrence. A clause cancelled down to nothing stays kept and
/// is listed in `empty_clauses`.
std::pair<Instance, NormalizationReport> normalize(const Instance& inst);

/// True iff each variable occurs at most once in every clause.
bool is_normalized(const Instance& inst);

}  // namespace maxeven
