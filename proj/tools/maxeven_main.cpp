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

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "maxeven/core.hpp"
#include "maxeven/digraph.hpp"
#include "maxeven/generate.hpp"
#include "maxeven/half_integral.hpp"
#include "maxeven/io.hpp"
#include "maxeven/oracle.hpp"
#include "maxeven/rounding.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitGuaranteeViolated = 4;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw maxeven::ParseError(1, "cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << content;
}

std::string fraction_of(long long value, std::size_t total) {
  return maxeven::Rational(value, total == 0 ? 1 : static_cast<long long>(total)).str();
}

void print_assignment(const maxeven::BoolAssignment& a) {
  std::cout << "assignment:";
  for (int v = 1; v <= a.size(); ++v) std::cout << ' ' << (a(v) > 0 ? "+1" : "-1");
  std::cout << '\n';
}

void print_elapsed(Clock::time_point start) {
  std::cout << "elapsed_ms: " << std::fixed << std::setprecision(3) << elapsed_ms(start)
            << '\n';
}

struct SolveOptions {
  std::string file;
  bool fraction = false;
  std::optional<std::uint64_t> seed;
};

int cmd_solve(const SolveOptions& opt) {
  const auto start = Clock::now();
  const maxeven::Instance inst = maxeven::parse_instance(read_file(opt.file));

  maxeven::BoolAssignment assignment;
  maxeven::Rational lp_value;
  std::string rounding = "derandomized";
  if (opt.seed) {
    auto [normalized, report] = maxeven::normalize(inst);
    const maxeven::HalfIntegralResult relaxed = maxeven::half_integral_solve(normalized);
    assignment = maxeven::randomized_round(relaxed.assignment, *opt.seed);
    lp_value = relaxed.lp_value;
    rounding = "randomized seed=" + std::to_string(*opt.seed) + " prng=mt19937-64";
  } else {
    const maxeven::Solution solution = maxeven::solve_max_and_even(inst);
    assignment = solution.assignment;
    lp_value = solution.lp_value;
  }
  const long long weak = maxeven::weak_count(inst, assignment);

  std::cout << "input: " << opt.file << '\n';
  std::cout << "n: " << inst.num_vars << '\n';
  std::cout << "m: " << inst.num_clauses() << '\n';
  std::cout << "lp_value: " << lp_value << '\n';
  std::cout << "rounding: " << rounding << '\n';
  std::cout << "weak_count: " << weak << '\n';
  if (opt.fraction) {
    std::cout << "weak_fraction: " << fraction_of(weak, inst.num_clauses()) << '\n';
  }
  print_assignment(assignment);
  print_elapsed(start);
  return kExitOk;
}

int cmd_cut(const std::string& file, bool fraction) {
  const auto start = Clock::now();
  const maxeven::Digraph g = maxeven::parse_digraph(read_file(file));
  const maxeven::CutResult result = maxeven::solve_dicut_cut(g);

  long long cut = 0;
  for (const auto& [u, v] : g.arcs) {
    if (u != v && result.side(u) != result.side(v)) ++cut;
  }

  std::cout << "input: " << file << '\n';
  std::cout << "n: " << g.num_vertices << '\n';
  std::cout << "m: " << g.num_arcs() << '\n';
  std::cout << "lp_value: " << result.lp_value << '\n';
  std::cout << "cut_value: " << cut << '\n';
  if (fraction) std::cout << "cut_fraction: " << fraction_of(cut, g.num_arcs()) << '\n';
  print_assignment(result.side);
  print_elapsed(start);
  return kExitOk;
}

int cmd_acyclic(const std::string& file, bool fraction) {
  const auto start = Clock::now();
  const maxeven::Digraph g = maxeven::parse_digraph(read_file(file));
  const maxeven::AcyclicResult result = maxeven::solve_dicut_acyclic(g);
  const long long value = maxeven::well_ordered_count(g, result.ordering);

  std::cout << "input: " << file << '\n';
  std::cout << "n: " << g.num_vertices << '\n';
  std::cout << "m: " << g.num_arcs() << '\n';
  std::cout << "lp_value: " << result.lp_value << '\n';
  std::cout << "acyclic_value: " << value << '\n';
  if (fraction) {
    std::cout << "acyclic_fraction: " << fraction_of(value, g.num_arcs()) << '\n';
  }
  std::cout << "partition_sizes: " << result.partition_sizes[0] << ' '
            << result.partition_sizes[1] << ' ' << result.partition_sizes[2] << '\n';
  std::cout << "ordering:";
  for (int v : result.ordering.order) std::cout << ' ' << v;
  std::cout << '\n';
  std::cout << "kept_arcs:";  // 1-based positions in the input arc list
  for (std::size_t idx : result.kept_arcs) std::cout << ' ' << idx + 1;
  std::cout << '\n';
  print_elapsed(start);
  return kExitOk;
}

struct VerifyOptions {
  std::string file;
  int oracle_cap = maxeven::kDefaultBoolCap;
  bool fraction = false;
  int trials = 0;
  std::string trial_type = "mae";
  int trial_n = 6;
  int trial_m = 10;
  std::uint64_t seed = 0;
};

int verify_instance(const maxeven::Instance& inst, const VerifyOptions& opt,
                    bool print_details) {
  const maxeven::Solution solution = maxeven::solve_max_and_even(inst);
  const long long weak = maxeven::weak_count(inst, solution.assignment);
  const long long strong_opt = maxeven::brute_strong_opt(inst, opt.oracle_cap);
  const long long lp_ceiling = solution.lp_value.ceil_to_int();

  if (print_details) {
    std::cout << "n: " << inst.num_vars << '\n';
    std::cout << "m: " << inst.num_clauses() << '\n';
    std::cout << "lp_value: " << solution.lp_value << '\n';
    std::cout << "weak_count: " << weak << '\n';
    std::cout << "strong_opt: " << strong_opt << '\n';
    if (opt.fraction) {
      std::cout << "weak_fraction: " << fraction_of(weak, inst.num_clauses()) << '\n';
    }
  }
  if (weak < lp_ceiling) {
    std::cout << "violation: weak_count " << weak << " < ceil(lp_value) " << lp_ceiling
              << '\n';
    return kExitGuaranteeViolated;
  }
  if (weak < strong_opt) {
    std::cout << "violation: weak_count " << weak << " < strong_opt " << strong_opt << '\n';
    return kExitGuaranteeViolated;
  }
  return kExitOk;
}

int verify_digraph(const maxeven::Digraph& g, const VerifyOptions& opt,
                   bool print_details) {
  const maxeven::CutResult cut = maxeven::solve_dicut_cut(g);
  const maxeven::AcyclicResult acyclic = maxeven::solve_dicut_acyclic(g);
  const long long dicut_opt = maxeven::brute_max_dicut(g, opt.oracle_cap);

  if (print_details) {
    std::cout << "n: " << g.num_vertices << '\n';
    std::cout << "m: " << g.num_arcs() << '\n';
    std::cout << "dicut_opt: " << dicut_opt << '\n';
    std::cout << "cut_value: " << cut.undirected_cut_value << '\n';
    std::cout << "cut_lp_value: " << cut.lp_value << '\n';
    std::cout << "acyclic_value: " << acyclic.value << '\n';
    std::cout << "acyclic_lp_value: " << acyclic.lp_value << '\n';
    if (opt.fraction) {
      std::cout << "cut_fraction: " << fraction_of(cut.undirected_cut_value, g.num_arcs())
                << '\n';
      std::cout << "acyclic_fraction: " << fraction_of(acyclic.value, g.num_arcs()) << '\n';
    }
  }

  if (cut.undirected_cut_value < dicut_opt) {
    std::cout << "violation: cut_value " << cut.undirected_cut_value << " < dicut_opt "
              << dicut_opt << '\n';
    return kExitGuaranteeViolated;
  }
  if (acyclic.value < dicut_opt) {
    std::cout << "violation: acyclic_value " << acyclic.value << " < dicut_opt "
              << dicut_opt << '\n';
    return kExitGuaranteeViolated;
  }
  if (acyclic.value < acyclic.lp_value.ceil_to_int()) {
    std::cout << "violation: acyclic_value below ceil(lp_value)\n";
    return kExitGuaranteeViolated;
  }
  if (!maxeven::check_acyclic(g, acyclic.kept_arcs)) {
    std::cout << "violation: kept subgraph contains a cycle\n";
    return kExitGuaranteeViolated;
  }
  // Ordering bound: max of the two candidates covers every strictly
  // increasing arc plus half the arcs inside the zero class.
  auto [sigma, sigma_prime] = maxeven::candidate_orderings(acyclic.ternary);
  const long long best = std::max(maxeven::well_ordered_count(g, sigma),
                                  maxeven::well_ordered_count(g, sigma_prime));
  long long increasing = 0;
  long long zero_zero = 0;
  for (const auto& [u, v] : g.arcs) {
    if (u == v) continue;
    if (acyclic.ternary(u) < acyclic.ternary(v)) ++increasing;
    if (acyclic.ternary(u) == 0 && acyclic.ternary(v) == 0) ++zero_zero;
  }
  if (2 * best < 2 * increasing + zero_zero) {
    std::cout << "violation: ordering bound failed\n";
    return kExitGuaranteeViolated;
  }
  if (print_details) std::cout << "acyclic_check: ok\n";
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
  const auto start = Clock::now();
  if (opt.trials > 0) {
    int worst = kExitOk;
    for (int trial = 1; trial <= opt.trials; ++trial) {
      const std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(trial);
      int code;
      if (opt.trial_type == "dg") {
        maxeven::DigraphGenParams params;
        params.num_vertices = opt.trial_n;
        params.num_arcs = opt.trial_m;
        params.seed = seed;
        code = verify_digraph(maxeven::gen_digraph(params).graph, opt, false);
      } else {
        maxeven::InstanceGenParams params;
        params.num_vars = opt.trial_n;
        params.num_clauses = opt.trial_m;
        params.seed = seed;
        code = verify_instance(maxeven::gen_instance(params), opt, false);
      }
      std::cout << "trial " << trial << ": " << (code == kExitOk ? "ok" : "FAILED") << '\n';
      worst = std::max(worst, code);
    }
    std::cout << "guarantee: " << (worst == kExitOk ? "ok" : "VIOLATED") << '\n';
    print_elapsed(start);
    return worst;
  }

  const std::string text = read_file(opt.file);
  std::cout << "verify: " << opt.file << '\n';
  int code;
  // Dispatch on the header kind.
  if (text.find("p dg") != std::string::npos &&
      (text.find("p mae") == std::string::npos ||
       text.find("p dg") < text.find("p mae"))) {
    code = verify_digraph(maxeven::parse_digraph(text), opt, true);
  } else {
    code = verify_instance(maxeven::parse_instance(text), opt, true);
  }
  std::cout << "guarantee: " << (code == kExitOk ? "ok" : "VIOLATED") << '\n';
  print_elapsed(start);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for Max-And-Even, Max-DiCut-Cut and Max-DiCut-Acyclic"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  std::uint64_t solve_seed = 0;
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve a Max-And-Even instance (MAE file): an assignment whose weak "
               "count is at least every achievable strong count");
  solve->add_option("file", solve_opt.file, "input .mae file")->required();
  solve->add_flag("--fraction", solve_opt.fraction, "also print counts normalized by m");
  CLI::Option* seed_flag = solve->add_option(
      "--seed", solve_seed, "use seeded randomized rounding instead of derandomization");

  std::string cut_file;
  bool cut_fraction = false;
  CLI::App* cut = app.add_subcommand(
      "cut", "Find an undirected cut at least as large as the best directed cut");
  cut->add_option("file", cut_file, "input .dg file")->required();
  cut->add_flag("--fraction", cut_fraction, "also print counts normalized by m");

  std::string acyclic_file;
  bool acyclic_fraction = false;
  CLI::App* acyclic = app.add_subcommand(
      "acyclic", "Find an acyclic subgraph at least as large as the best directed cut");
  acyclic->add_option("file", acyclic_file, "input .dg file")->required();
  acyclic->add_flag("--fraction", acyclic_fraction, "also print counts normalized by m");

  maxeven::InstanceGenParams inst_params;
  std::string gen_inst_out;
  CLI::App* gen_inst = app.add_subcommand("gen-instance", "Generate a random MAE file");
  gen_inst->add_option("--n", inst_params.num_vars, "variables")->check(CLI::Range(1, 100000));
  gen_inst->add_option("--m", inst_params.num_clauses, "clauses")->check(CLI::Range(0, 1000000));
  gen_inst->add_option("--kmin", inst_params.min_clause_size, "min clause size");
  gen_inst->add_option("--kmax", inst_params.max_clause_size, "max clause size");
  gen_inst->add_option("--seed", inst_params.seed, "generator seed");
  gen_inst->add_option("-o,--output", gen_inst_out, "output path (default stdout)");

  maxeven::DigraphGenParams dg_params;
  double planted = -1.0;
  std::string gen_dg_out;
  CLI::App* gen_dg = app.add_subcommand("gen-digraph", "Generate a random DG file");
  gen_dg->add_option("--n", dg_params.num_vertices, "vertices")->check(CLI::Range(1, 100000));
  gen_dg->add_option("--m", dg_params.num_arcs, "arcs")->check(CLI::Range(0, 1000000));
  gen_dg->add_option("--seed", dg_params.seed, "generator seed");
  CLI::Option* planted_flag = gen_dg->add_option(
      "--planted", planted, "fraction of arcs planted forward across a random bipartition");
  gen_dg->add_option("-o,--output", gen_dg_out, "output path (default stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run solver and brute-force oracles, asserting the guarantees");
  CLI::Option* verify_file =
      verify->add_option("file", verify_opt.file, "input .mae or .dg file");
  verify->add_option("--oracle-cap", verify_opt.oracle_cap,
                     "max variables/vertices the oracles will enumerate");
  verify->add_flag("--fraction", verify_opt.fraction, "also print normalized values");
  CLI::Option* trials_flag = verify->add_option(
      "--trials", verify_opt.trials, "verify this many generated random inputs instead");
  verify->add_option("--type", verify_opt.trial_type, "trial input kind: mae or dg")
      ->check(CLI::IsMember({"mae", "dg"}));
  verify->add_option("--n", verify_opt.trial_n, "trial size: variables/vertices");
  verify->add_option("--m", verify_opt.trial_m, "trial size: clauses/arcs");
  verify->add_option("--seed", verify_opt.seed, "base seed for trials");
  verify_file->excludes(trials_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (solve->parsed()) {
      if (seed_flag->count() > 0) solve_opt.seed = solve_seed;
      return cmd_solve(solve_opt);
    }
    if (cut->parsed()) return cmd_cut(cut_file, cut_fraction);
    if (acyclic->parsed()) return cmd_acyclic(acyclic_file, acyclic_fraction);
    if (gen_inst->parsed()) {
      write_output(gen_inst_out, maxeven::gen_instance_file(inst_params));
      return kExitOk;
    }
    if (gen_dg->parsed()) {
      if (planted_flag->count() > 0) dg_params.planted_density = planted;
      write_output(gen_dg_out, maxeven::gen_digraph_file(dg_params));
      return kExitOk;
    }
    if (verify->parsed()) {
      if (verify_opt.trials == 0 && verify_opt.file.empty()) {
        std::cerr << "verify: need an input file or --trials\n";
        return kExitError;
      }
      return cmd_verify(verify_opt);
    }
  } catch (const maxeven::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const maxeven::CapExceeded& e) {
    std::cerr << "oracle cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
