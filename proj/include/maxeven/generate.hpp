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
#include <optional>
#include <string>

#include "maxeven/core.hpp"
#include "maxeven/digraph.hpp"

namespace maxeven {

// Seeded generators, deterministic per build (mt19937-64 driven). Files
// produced with the same seed are byte-identical; byte compatibility across
// different builds is not promised.

struct InstanceGenParams {
  int num_vars = 5;
  int num_clauses = 10;
  int min_clause_size = 1;
  int max_clause_size = 3;
  std::uint64_t seed = 0;
};

/// Uniform clauses: size in [min,max], variables and signs uniform.
/// Duplicate and complementary literals happen naturally.
Instance gen_instance(const InstanceGenParams& params);

/// MAE file for gen_instance, with the parameters echoed in a comment.
std::string gen_instance_file(const InstanceGenParams& params);

struct DigraphGenParams {
  int num_vertices = 6;
  int num_arcs = 10;
  std::uint64_t seed = 0;
  /// When set (in [0,1]), that fraction of the arcs crosses a hidden random
  /// bipartition forward, planting a known lower bound on the maximum
  /// dicut; the rest are uniform noise (loops and parallels included).
  std::optional<double> planted_density;
};

struct GeneratedDigraph {
  Digraph graph;
  long long planted_dicut_bound = 0;  // 0 when nothing was planted
};

GeneratedDigraph gen_digraph(const DigraphGenParams& params);

/// DG file for gen_digraph; the planted bound, if any, is recorded in a
/// comment line.
std::string gen_digraph_file(const DigraphGenParams& params);

}  // namespace maxeven
