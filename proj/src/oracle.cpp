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

#include "maxeven/oracle.hpp"

#include <algorithm>
#include <string>

namespace maxeven {

namespace {

void check_cap(int n, int cap, const char* who) {
  if (n > cap) {
    throw CapExceeded(std::string(who) + ": " + std::to_string(n) +
                      " variables exceed cap " + std::to_string(cap));
  }
  if (cap > 62) throw CapExceeded(std::string(who) + ": cap above 62 is not supported");
}

}  // namespace

long long brute_strong_opt(const Instance& inst, int cap) {
  validate(inst);
  check_cap(inst.num_vars, cap, "brute_strong_opt");
  long long best = 0;
  const std::uint64_t total = 1ULL << inst.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    best = std::max(best, strong_count(inst, BoolAssignment::from_mask(inst.num_vars, mask)));
  }
  return best;
}

long long brute_weak_opt(const Instance& inst, int cap) {
  validate(inst);
  check_cap(inst.num_vars, cap, "brute_weak_opt");
  long long best = 0;
  const std::uint64_t total = 1ULL << inst.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    best = std::max(best, weak_count(inst, BoolAssignment::from_mask(inst.num_vars, mask)));
  }
  return best;
}

Rational brute_ternary_opt(const Instance& inst, int cap) {
  validate(inst);
  if (inst.num_vars > cap) {
    throw CapExceeded("brute_ternary_opt: " + std::to_string(inst.num_vars) +
                      " variables exceed cap " + std::to_string(cap));
  }

  // Odometer over {-1,0,+1}^n, variable 1 as the fastest digit. Twice the
  // objective is an integer, so the scan stays in machine arithmetic.
  std::vector<std::int8_t> digits(static_cast<std::size_t>(inst.num_vars), -1);
  long long best_twice = -1;
  for (;;) {
    long long twice = 0;
    for (const Clause& clause : inst.clauses) {
      if (clause.empty()) {
        twice += 2;
        continue;
      }
      int mn = 2;
      for (const Literal& lit : clause.literals) {
        mn = std::min<int>(mn, lit.sign * digits[static_cast<std::size_t>(lit.var - 1)]);
        if (mn == -1) break;
      }
      twice += 1 + mn;
    }
    best_twice = std::max(best_twice, twice);

    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == 1) {
      digits[pos] = -1;
      ++pos;
    }
    if (pos == digits.size()) break;
    ++digits[pos];
  }
  return Rational(best_twice, 2);
}

long long brute_max_dicut(const Digraph& g, int cap) {
  validate(g);
  check_cap(g.num_vertices, cap, "brute_max_dicut");
  long long best = 0;
  const std::uint64_t total = 1ULL << g.num_vertices;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    long long cut = 0;
    for (const auto& [u, v] : g.arcs) {
      const bool u_in = (mask >> (u - 1)) & 1;
      const bool v_in = (mask >> (v - 1)) & 1;
      if (u_in && !v_in) ++cut;
    }
    best = std::max(best, cut);
  }
  return best;
}

long long brute_max_cut(const Digraph& g, int cap) {
  validate(g);
  check_cap(g.num_vertices, cap, "brute_max_cut");
  long long best = 0;
  const std::uint64_t total = 1ULL << g.num_vertices;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    long long cut = 0;
    for (const auto& [u, v] : g.arcs) {
      if (u == v) continue;
      const bool u_in = (mask >> (u - 1)) & 1;
      const bool v_in = (mask >> (v - 1)) & 1;
      if (u_in != v_in) ++cut;
    }
    best = std::max(best, cut);
  }
  return best;
}

bool check_acyclic(const Digraph& g, const std::vector<std::size_t>& kept_arcs) {
  validate(g);
  // Kahn's algorithm on the kept subgraph.
  const auto n = static_cast<std::size_t>(g.num_vertices);
  std::vector<std::vector<int>> out(n + 1);
  std::vector<int> indegree(n + 1, 0);
  for (std::size_t idx : kept_arcs) {
    const auto& [u, v] = g.arcs.at(idx);
    out[static_cast<std::size_t>(u)].push_back(v);
    ++indegree[static_cast<std::size_t>(v)];
  }
  std::vector<int> ready;
  for (int v = 1; v <= g.num_vertices; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : out[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

}  // namespace maxeven
