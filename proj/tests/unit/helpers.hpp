#pragma once

#include <initializer_list>
#include <utility>

#include "maxeven/core.hpp"
#include "maxeven/digraph.hpp"

namespace test_helpers {

// Clauses as signed integers, DIMACS style: {-1, 2} is {-x1, +x2}.
inline maxeven::Instance make_instance(
    int n, std::initializer_list<std::initializer_list<int>> clauses) {
  maxeven::Instance inst;
  inst.num_vars = n;
  for (const auto& c : clauses) {
    maxeven::Clause clause;
    for (int lit : c) {
      clause.literals.push_back({lit < 0 ? -lit : lit, lit < 0 ? -1 : +1});
    }
    inst.clauses.push_back(std::move(clause));
  }
  return inst;
}

inline maxeven::Digraph make_digraph(
    int n, std::initializer_list<std::pair<int, int>> arcs) {
  maxeven::Digraph g;
  g.num_vertices = n;
  for (const auto& arc : arcs) g.arcs.push_back(arc);
  return g;
}

inline maxeven::TernaryAssignment tern(std::initializer_list<int> values) {
  std::vector<std::int8_t> v;
  for (int x : values) v.push_back(static_cast<std::int8_t>(x));
  return maxeven::TernaryAssignment(std::move(v));
}

inline maxeven::BoolAssignment boolean(std::initializer_list<int> values) {
  std::vector<std::int8_t> v;
  for (int x : values) v.push_back(static_cast<std::int8_t>(x));
  return maxeven::BoolAssignment(std::move(v));
}

}  // namespace test_helpers
