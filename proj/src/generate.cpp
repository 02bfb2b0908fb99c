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

#include "maxeven/generate.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "maxeven/io.hpp"

namespace maxeven {

namespace {

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

void check_instance_params(const InstanceGenParams& p) {
  if (p.num_vars < 1 || p.num_clauses < 0 || p.min_clause_size < 0 ||
      p.min_clause_size > p.max_clause_size) {
    throw std::invalid_argument("gen_instance: invalid parameters");
  }
}

void check_digraph_params(const DigraphGenParams& p) {
  if (p.num_vertices < 1 || p.num_arcs < 0) {
    throw std::invalid_argument("gen_digraph: invalid parameters");
  }
  if (p.planted_density &&
      (*p.planted_density < 0.0 || *p.planted_density > 1.0 ||
       !std::isfinite(*p.planted_density))) {
    throw std::invalid_argument("gen_digraph: planted density must be in [0,1]");
  }
}

}  // namespace

Instance gen_instance(const InstanceGenParams& p) {
  check_instance_params(p);
  std::mt19937_64 rng(p.seed);
  Instance inst;
  inst.num_vars = p.num_vars;
  inst.clauses.reserve(static_cast<std::size_t>(p.num_clauses));
  for (int i = 0; i < p.num_clauses; ++i) {
    const int size = uniform_int(rng, p.min_clause_size, p.max_clause_size);
    Clause clause;
    clause.literals.reserve(static_cast<std::size_t>(size));
    for (int j = 0; j < size; ++j) {
      const int var = uniform_int(rng, 1, p.num_vars);
      const int sign = uniform_int(rng, 0, 1) == 0 ? -1 : 1;
      clause.literals.push_back({var, sign});
    }
    inst.clauses.push_back(std::move(clause));
  }
  return inst;
}

std::string gen_instance_file(const InstanceGenParams& p) {
  const Instance inst = gen_instance(p);
  std::ostringstream os;
  os << "c gen-instance n=" << p.num_vars << " m=" << p.num_clauses
     << " kmin=" << p.min_clause_size << " kmax=" << p.max_clause_size
     << " seed=" << p.seed << " prng=mt19937-64\n";
  os << render_instance(inst);
  return os.str();
}

GeneratedDigraph gen_digraph(const DigraphGenParams& p) {
  check_digraph_params(p);
  std::mt19937_64 rng(p.seed);
  GeneratedDigraph out;
  out.graph.num_vertices = p.num_vertices;

  int forward = 0;
  std::vector<int> side_a, side_b;
  if (p.planted_density && p.num_vertices >= 2) {
    forward = static_cast<int>(std::llround(*p.planted_density * p.num_arcs));
    // Draw bipartitions until both sides are inhabited.
    while (side_a.empty() || side_b.empty()) {
      side_a.clear();
      side_b.clear();
      for (int v = 1; v <= p.num_vertices; ++v) {
        (uniform_int(rng, 0, 1) == 0 ? side_a : side_b).push_back(v);
      }
    }
  }

  for (int i = 0; i < p.num_arcs; ++i) {
    if (i < forward) {
      const int u = side_a[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<int>(side_a.size()) - 1))];
      const int v = side_b[static_cast<std::size_t>(
          uniform_int(rng, 0, static_cast<int>(side_b.size()) - 1))];
      out.graph.arcs.emplace_back(u, v);
    } else {
      out.graph.arcs.emplace_back(uniform_int(rng, 1, p.num_vertices),
                                  uniform_int(rng, 1, p.num_vertices));
    }
  }
  out.planted_dicut_bound = forward;
  return out;
}

std::string gen_digraph_file(const DigraphGenParams& p) {
  const GeneratedDigraph gen = gen_digraph(p);
  std::ostringstream os;
  os << "c gen-digraph n=" << p.num_vertices << " m=" << p.num_arcs
     << " seed=" << p.seed << " prng=mt19937-64\n";
  if (p.planted_density) {
    os << "c planted dicut lower bound " << gen.planted_dicut_bound << "\n";
  }
  os << render_digraph(gen.graph);
  return os.str();
}

}  // namespace maxeven
