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

#include "maxeven/digraph.hpp"

#include <stdexcept>
#include <string>

#include "maxeven/half_integral.hpp"

namespace maxeven {

void validate(const Digraph& g) {
  if (g.num_vertices < 0) throw std::invalid_argument("negative vertex count");
  for (const auto& [u, v] : g.arcs) {
    if (u < 1 || u > g.num_vertices || v < 1 || v > g.num_vertices) {
      throw std::out_of_range("arc endpoint out of range [1, " +
                              std::to_string(g.num_vertices) + "]");
    }
  }
}

Instance digraph_to_instance(const Digraph& g) {
  validate(g);
  Instance inst;
  inst.num_vars = g.num_vertices;
  inst.clauses.reserve(g.arcs.size());
  for (const auto& [u, v] : g.arcs) {
    inst.clauses.push_back(Clause{{neg(u), pos(v)}});
  }
  return inst;
}

CutResult solve_dicut_cut(const Digraph& g) {
  const Solution solution = solve_max_and_even(digraph_to_instance(g));
  CutResult result;
  result.side = solution.assignment;
  result.lp_value = solution.lp_value;
  result.ternary = solution.ternary;
  result.undirected_cut_value = 0;
  for (const auto& [u, v] : g.arcs) {
    if (u != v && result.side(u) != result.side(v)) ++result.undirected_cut_value;
  }
  return result;
}

Digraph remove_loops(const Digraph& g) {
  validate(g);
  Digraph out;
  out.num_vertices = g.num_vertices;
  for (const auto& arc : g.arcs) {
    if (arc.first != arc.second) out.arcs.push_back(arc);
  }
  return out;
}

std::pair<VertexOrdering, VertexOrdering> candidate_orderings(const TernaryAssignment& t) {
  std::vector<int> low, mid, high;
  for (int v = 1; v <= t.size(); ++v) {
    (t(v) < 0 ? low : t(v) == 0 ? mid : high).push_back(v);
  }
  VertexOrdering sigma;
  sigma.order.reserve(t.size());
  sigma.order.insert(sigma.order.end(), low.begin(), low.end());
  sigma.order.insert(sigma.order.end(), mid.begin(), mid.end());
  sigma.order.insert(sigma.order.end(), high.begin(), high.end());

  VertexOrdering sigma_prime;
  sigma_prime.order.reserve(t.size());
  sigma_prime.order.insert(sigma_prime.order.end(), low.begin(), low.end());
  sigma_prime.order.insert(sigma_prime.order.end(), mid.rbegin(), mid.rend());
  sigma_prime.order.insert(sigma_prime.order.end(), high.begin(), high.end());
  return {std::move(sigma), std::move(sigma_prime)};
}

namespace {

std::vector<int> positions(const VertexOrdering& ordering, int n) {
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  if (ordering.order.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("ordering size does not match vertex count");
  }
  for (std::size_t i = 0; i < ordering.order.size(); ++i) {
    const int v = ordering.order[i];
    if (v < 1 || v > n || pos[v] != -1) {
      throw std::invalid_argument("ordering is not a permutation of 1..n");
    }
    pos[v] = static_cast<int>(i);
  }
  return pos;
}

}  // namespace

long long well_ordered_count(const Digraph& g, const VertexOrdering& ordering) {
  validate(g);
  const std::vector<int> pos = positions(ordering, g.num_vertices);
  long long count = 0;
  for (const auto& [u, v] : g.arcs) {
    if (pos[u] < pos[v]) ++count;
  }
  return count;
}

AcyclicResult solve_dicut_acyclic(const Digraph& g) {
  // Loop removal matters here: a loop valued 0 would claim the 1/2
  // contribution of an E_00 arc without either ordering being able to keep
  // it. It changes neither the maximum dicut nor the output.
  const Digraph stripped = remove_loops(g);
  auto [normalized, report] = normalize(digraph_to_instance(stripped));
  HalfIntegralResult relaxed = half_integral_solve(normalized);

  auto [sigma, sigma_prime] = candidate_orderings(relaxed.assignment);
  const long long count = well_ordered_count(g, sigma);
  const long long count_prime = well_ordered_count(g, sigma_prime);

  AcyclicResult result;
  result.ordering = count_prime > count ? std::move(sigma_prime) : std::move(sigma);
  result.value = count_prime > count ? count_prime : count;
  result.lp_value = relaxed.lp_value;
  result.ternary = relaxed.assignment;
  for (int v = 1; v <= relaxed.assignment.size(); ++v) {
    ++result.partition_sizes[static_cast<std::size_t>(relaxed.assignment(v) + 1)];
  }
  const std::vector<int> pos = positions(result.ordering, g.num_vertices);
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    if (pos[g.arcs[i].first] < pos[g.arcs[i].second]) result.kept_arcs.push_back(i);
  }
  return result;
}

}  // namespace maxeven
