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

#include <stdexcept>
#include <string>
#include <string_view>

#include "maxeven/core.hpp"
#include "maxeven/digraph.hpp"

namespace maxeven {

/// Format error with the 1-based line it was detected on.
struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}

  int line;
};

// MAE format. Comment lines start with "c". Header "p mae <n> <m>", then m
// clause lines of nonzero signed integers terminated by 0, DIMACS style but
// with multiset semantics: order and repeated literals are significant.
//
//   c an example
//   p mae 2 1
//   -1 2 0
Instance parse_instance(std::string_view text);
std::string render_instance(const Instance& inst);

// DG format. Header "p dg <n> <m>", then m lines "a <u> <v>". Loops and
// parallel arcs are representable and preserved.
Digraph parse_digraph(std::string_view text);
std::string render_digraph(const Digraph& g);

}  // namespace maxeven
