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

#include <cstddef>
#include <vector>

#include "maxeven/core.hpp"
#include "maxeven/digraph.hpp"
#include "maxeven/rational.hpp"

namespace maxeven {

// Deliberately naive exhaustive references used by tests and verify mode;
// never on the solve path. Enumeration is in fixed counting order so any
// reported witness is reproducible. Exceeding a cap throws CapExceeded --
// an oracle either answers exactly or refuses.

inline constexpr int kDefaultBoolCap = 20;     // 2^n assignments
inline constexpr int kDefaultTernaryCap = 13;  // 3^n assignments

/// Max over all 2^n assignments of strong_count.
long long brute_strong_opt(const Instance& inst, int cap = kDefaultBoolCap);

/// Max over all 2^n assignments of weak_count.
long long brute_weak_opt(const Instance& inst, int cap = kDefaultBoolCap);

/// Max of objective_value over all 3^n ternary assignments.
Rational brute_ternary_opt(const Instance& inst, int cap = kDefaultTernaryCap);

/// Max over bipartitions of the number of arcs leaving the chosen side.
long long brute_max_dicut(const Digraph& g, int cap = kDefaultBoolCap);

/// Max over bipartitions of the number of non-loop arcs crossing either way.
long long brute_max_cut(const Digraph& g, int cap = kDefaultBoolCap);

/// True iff the arcs selected by `kept_arcs` admit a topological order
/// (checked independently of any ordering a solver produced).
bool check_acyclic(const Digraph& g, const std::vector<std::size_t>& kept_arcs);

}  // namespace maxeven
