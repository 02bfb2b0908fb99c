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

#include "maxeven/io.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

namespace maxeven {

namespace {

struct Line {
  int number;
  std::string text;
};

// Content lines, with comments ("c ...") and blank lines stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    start = end + 1;
    if (start > text.size() && line.empty()) break;

    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == 'c' &&
        (first + 1 == line.size() || line[first + 1] == ' ' || line[first + 1] == '\t')) {
      continue;
    }
    lines.push_back({number, std::move(line)});
  }
  return lines;
}

bool parse_int(const std::string& token, long long& out) {
  if (token.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtoll(token.c_str(), &end, 10);
  return errno == 0 && end != nullptr && *end == '\0';
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(std::move(token));
  return tokens;
}

// Parses "p <kind> <n> <m>".
std::pair<int, int> parse_header(const Line& line, const std::string& kind) {
  const std::vector<std::string> tok = tokens_of(line.text);
  long long n = 0;
  long long m = 0;
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != kind || !parse_int(tok[2], n) ||
      !parse_int(tok[3], m) || n < 0 || m < 0 || n > 1000000 || m > 1000000) {
    throw ParseError(line.number, "malformed header, expected \"p " + kind + " <n> <m>\"");
  }
  return {static_cast<int>(n), static_cast<int>(m)};
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header \"p mae <n> <m>\"");

  const auto [n, m] = parse_header(lines[0], "mae");
  Instance inst;
  inst.num_vars = n;

  std::size_t next = 1;
  for (int i = 0; i < m; ++i, ++next) {
    if (next >= lines.size()) {
      throw ParseError(lines.back().number,
                       "expected " + std::to_string(m) + " clause lines, found " +
                           std::to_string(i));
    }
    const Line& line = lines[next];
    Clause clause;
    bool terminated = false;
    for (const std::string& token : tokens_of(line.text)) {
      long long lit = 0;
      if (!parse_int(token, lit)) {
        throw ParseError(line.number, "malformed clause token \"" + token + "\"");
      }
      if (terminated) {
        throw ParseError(line.number, "literal 0 inside clause body");
      }
      if (lit == 0) {
        terminated = true;
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if (var > n) {
        throw ParseError(line.number, "variable " + std::to_string(var) +
                                          " out of range [1, " + std::to_string(n) + "]");
      }
      clause.literals.push_back({static_cast<int>(var), lit < 0 ? -1 : 1});
    }
    if (!terminated) {
      throw ParseError(line.number, "missing clause terminator 0");
    }
    inst.clauses.push_back(std::move(clause));
  }
  if (next < lines.size()) {
    throw ParseError(lines[next].number, "unexpected content after the final clause");
  }
  return inst;
}

std::string render_instance(const Instance& inst) {
  validate(inst);
  std::ostringstream os;
  os << "p mae " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const Clause& clause : inst.clauses) {
    for (const Literal& lit : clause.literals) {
      os << lit.sign * lit.var << ' ';
    }
    os << "0\n";
  }
  return os.str();
}

Digraph parse_digraph(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header \"p dg <n> <m>\"");

  const auto [n, m] = parse_header(lines[0], "dg");
  Digraph g;
  g.num_vertices = n;

  std::size_t next = 1;
  for (int i = 0; i < m; ++i, ++next) {
    if (next >= lines.size()) {
      throw ParseError(lines.back().number, "expected " + std::to_string(m) +
                                                " arc lines, found " + std::to_string(i));
    }
    const Line& line = lines[next];
    const std::vector<std::string> tok = tokens_of(line.text);
    long long u = 0;
    long long v = 0;
    if (tok.size() != 3 || tok[0] != "a" || !parse_int(tok[1], u) || !parse_int(tok[2], v)) {
      throw ParseError(line.number, "malformed arc line, expected \"a <u> <v>\"");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(line.number, "arc endpoint out of range [1, " + std::to_string(n) + "]");
    }
    g.arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next < lines.size()) {
    throw ParseError(lines[next].number, "unexpected content after the final arc");
  }
  return g;
}

std::string render_digraph(const Digraph& g) {
  validate(g);
  std::ostringstream os;
  os << "p dg " << g.num_vertices << ' ' << g.arcs.size() << '\n';
  for (const auto& [u, v] : g.arcs) {
    os << "a " << u << ' ' << v << '\n';
  }
  return os.str();
}

}  // namespace maxeven
