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

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "maxeven/core.hpp"
#include "maxeven/rounding.hpp"

namespace maxeven {

/// Directed multigraph on vertices 1..num_vertices. Loops and parallel
/// arcs are allowed; arc identity is by position in `arcs`.
struct Digraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)

  std::size_t num_arcs() const { return arcs.size(); }

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

void validate(const Digraph& g);

/// One clause {-u, +v} per arc occurrence, in arc order. A loop becomes the
/// tautology {-u, +u}, which normalization later excludes.
Instance digraph_to_instance(const Digraph& g);

struct CutResult {
  BoolAssignment side;             // bipartition by sign
  long long undirected_cut_value;  // non-loop arcs with endpoints on opposite sides
  Rational lp_value;
  TernaryAssignment ternary;
};

/// Finds an undirected cut at least as large as every directed cut of g.
CutResult solve_dicut_cut(const Digraph& g);

Digraph remove_loops(const Digraph& g);

struct VertexOrdering {
  std::vector<int> order;  // permutation of 1..n, position = rank

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;
};

/// The two candidate orderings built from a ternary assignment: vertices
/// valued -1, then 0, then +1, each group in ascending id order; the second
/// ordering reverses the middle group.
std::pair<VertexOrdering, VertexOrdering> candidate_orderings(const TernaryAssignment& t);

/// Arcs whose tail strictly precedes its head; loops never count.
long long well_ordered_count(const Digraph& g, const VertexOrdering& ordering);

struct AcyclicResult {
  VertexOrdering ordering;
  std::vector<std::size_t> kept_arcs;  // indices into the input arc list
  long long value = 0;                 // kept_arcs.size()
  std::array<long long, 3> partition_sizes{};  // |V_-1|, |V_0|, |V_+1|
  Rational lp_value;
  TernaryAssignment ternary;
};

/// Finds an acyclic subgraph with at least as many arcs as every directed
/// cut of g: solve the relaxation of the loop-free arc clauses, then keep
/// whichever candidate ordering well-orders more arcs (ties to the first).
AcyclicResult solve_dicut_acyclic(const Digraph& g);

}  // namespace maxeven
