/*
 * Copyright 2026 the fzbisim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command line front end.  Exit codes are part of the contract:
//   0  success
//   1  a requested verification failed (--check, --oracle, check)
//   2  I/O failure or unusable argument values
//   3  parse error in an input document
//   4  internal invariant violation (a bug, please report)
//   5  signature mismatch between the two graphs of a pairwise command
// Results go to stdout; diagnostics and traces go to stderr.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fzbisim/bisim.hpp"
#include "fzbisim/engine.hpp"
#include "fzbisim/gen.hpp"
#include "fzbisim/graph.hpp"
#include "fzbisim/oracle.hpp"
#include "fzbisim/relation.hpp"

namespace {

struct CommandError : std::runtime_error {
  int code;
  CommandError(int code, const std::string& message)
      : std::runtime_error(message), code(code) {}
};

std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    if (std::cin.bad()) throw CommandError(2, "cannot read standard input");
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError(2, "cannot open '" + path + "'");
    buf << in.rdbuf();
    if (in.bad()) throw CommandError(2, "cannot read '" + path + "'");
  }
  return std::move(buf).str();
}

fzb::FuzzyGraph read_graph(const std::string& path) {
  std::string text = slurp(path);
  try {
    return fzb::parse_graph(text);
  } catch (const fzb::ParseError& e) {
    throw CommandError(3, path + ": " + e.what());
  }
}

std::string format_symbols(const std::set<std::string>& symbols) {
  std::string out = "{";
  for (const std::string& s : symbols) {
    if (out.size() > 1) out += ',';
    out += s;
  }
  return out + "}";
}

void require_shared_signature(const fzb::FuzzyGraph& g1,
                              const fzb::FuzzyGraph& g2) {
  if (g1.sigma_v() != g2.sigma_v()) {
    throw CommandError(5, "signature mismatch: sigma_v " +
                              format_symbols(g1.sigma_v()) + " vs " +
                              format_symbols(g2.sigma_v()));
  }
  if (g1.sigma_e() != g2.sigma_e()) {
    throw CommandError(5, "signature mismatch: sigma_e " +
                              format_symbols(g1.sigma_e()) + " vs " +
                              format_symbols(g2.sigma_e()));
  }
}

// Stability of the partition against its own cuts, at every degree of
// the graph's table.  Returns 0 or prints a witness and returns 1.
int verify_stability(const fzb::FuzzyGraph& g, const fzb::Block& b) {
  for (fzb::Degree d : fzb::degree_table(g)) {
    fzb::CrispPartition q = fzb::d_cut_partition(b, d);
    fzb::StabilityReport report = fzb::is_d_cut_stable(g, b, d, q);
    if (!report.ok) {
      std::cerr << "unstable at d=" << d.str() << ": " << report.describe()
                << '\n';
      return 1;
    }
  }
  return 0;
}

int run_partition(const std::string& file, bool json, bool check, bool trace) {
  fzb::FuzzyGraph g = read_graph(file);
  fzb::EngineOptions options;
  if (trace) options.trace = &std::cerr;
  fzb::Block b = fzb::compute_fuzzy_partition(g, options);
  std::cout << (json ? b.json() : b.str()) << '\n';
  return check ? verify_stability(g, b) : 0;
}

int run_bisim(const std::string& file1, const std::string& file2, bool matrix,
              bool oracle) {
  fzb::FuzzyGraph g1 = read_graph(file1);
  fzb::FuzzyGraph g2 = read_graph(file2);
  require_shared_signature(g1, g2);
  fzb::BisimResult result = fzb::greatest_bisimulation(g1, g2);
  std::cout << (matrix ? result.relation.matrix() : result.relation.tsv());
  if (oracle) {
    fzb::FuzzyRelation reference = fzb::greatest_bisim_fixpoint(g1, g2);
    if (!(reference == result.relation)) {
      std::cerr << "oracle mismatch: the fixpoint relation differs\n";
      return 1;
    }
  }
  return 0;
}

int run_check(const std::string& file) {
  fzb::FuzzyGraph g = read_graph(file);
  fzb::EngineOptions options;
  options.check_invariants = true;
  fzb::Block b = fzb::compute_fuzzy_partition(g, options);
  std::cout << "ok invariants\n";
  if (verify_stability(g, b) != 0) return 1;
  std::cout << "ok stability\n";
  fzb::FuzzyRelation z = fzb::partition_to_relation(b);
  fzb::EquivalenceReport eq = fzb::is_fuzzy_equivalence(z);
  if (!eq.ok) {
    std::cerr << "not a fuzzy equivalence: " << eq.describe() << '\n';
    return 1;
  }
  std::cout << "ok equivalence\n";
  fzb::BisimCheckReport bc = fzb::check_bisimulation(g, g, z);
  if (!bc.holds) {
    std::cerr << "not a bisimulation: " << bc.describe() << '\n';
    return 1;
  }
  std::cout << "ok bisimulation\n";
  return 0;
}

int run_oracle(const std::vector<std::string>& files, bool matrix,
               fzb::SweepOrder order) {
  fzb::FuzzyGraph g1 = read_graph(files.front());
  fzb::FuzzyRelation z;
  if (files.size() == 2) {
    fzb::FuzzyGraph g2 = read_graph(files[1]);
    require_shared_signature(g1, g2);
    z = fzb::greatest_bisim_fixpoint(g1, g2, order);
  } else {
    z = fzb::greatest_autobisim_fixpoint(g1, order);
  }
  std::cout << (matrix ? z.matrix() : z.tsv());
  return 0;
}

void apply_degree_spec(const std::string& text, fzb::GenSpec& spec) {
  if (text.find_first_of(".,") == std::string::npos) {
    try {
      spec.degree_count = static_cast<std::uint32_t>(std::stoul(text));
    } catch (const std::exception&) {
      throw CommandError(2, "bad degree count '" + text + "'");
    }
    spec.degrees.clear();
    return;
  }
  spec.degrees.clear();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto d = fzb::Degree::parse(item);
    if (!d || d->is_zero()) {
      throw CommandError(2, "bad degree '" + item + "' in the pool");
    }
    spec.degrees.push_back(*d);
  }
}

int run_gen(const fzb::GenSpec& spec) {
  std::cout << fzb::serialize_graph(fzb::generate(spec));
  return 0;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

int run_bench(std::uint32_t n_min, std::uint32_t n_max, std::uint32_t density,
              fzb::GenSpec base, int reps) {
  std::cout << "# n\tm\tl\twall_ms\tmax_refine2\tchecksum\n";
  for (std::uint64_t n = n_min; n <= n_max; n *= 2) {
    fzb::GenSpec spec = base;
    spec.n = static_cast<std::uint32_t>(n);
    spec.m = n * density;
    spec.seed = base.seed + n;
    fzb::FuzzyGraph g = fzb::generate(spec);

    fzb::EngineOptions options;
    options.instrument = true;
    fzb::EngineStats stats;
    double best_ms = 0;
    std::string partition;
    for (int rep = 0; rep < reps; ++rep) {
      auto start = std::chrono::steady_clock::now();
      fzb::Block b = fzb::compute_fuzzy_partition(g, options, &stats);
      auto stop = std::chrono::steady_clock::now();
      double ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      if (rep == 0 || ms < best_ms) best_ms = ms;
      partition = b.str();
    }
    std::cout << n << '\t' << spec.m << '\t' << fzb::degree_table(g).size()
              << '\t' << std::fixed << std::setprecision(3) << best_ms << '\t'
              << stats.max_refine2_participation << '\t' << std::hex
              << std::setw(16) << std::setfill('0') << fnv1a(partition)
              << std::dec << std::setfill(' ') << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy labeled graph bisimulation tools"};
  app.require_subcommand(1);

  std::string graph_file, graph_file2;
  bool flag_json = false, flag_check = false, flag_trace = false;
  bool flag_matrix = false, flag_oracle = false;

  CLI::App* partition =
      app.add_subcommand("partition", "compute the fuzzy partition of a graph");
  partition->add_option("graph", graph_file, "graph file ('-' for stdin)")
      ->required();
  partition->add_flag("--json", flag_json, "structured output");
  partition->add_flag("--check", flag_check,
                      "verify cut stability at every table degree");
  partition->add_flag("--trace", flag_trace, "refinement trace on stderr");

  CLI::App* bisim = app.add_subcommand(
      "bisim", "greatest fuzzy bisimulation between two graphs");
  bisim->add_option("graph1", graph_file, "first graph file")->required();
  bisim->add_option("graph2", graph_file2, "second graph file")->required();
  bisim->add_flag("--matrix", flag_matrix, "dense matrix output");
  bisim->add_flag("--oracle", flag_oracle,
                  "cross-check against the naive fixpoint");

  CLI::App* check = app.add_subcommand(
      "check", "run the full verification battery on a graph");
  check->add_option("graph", graph_file, "graph file ('-' for stdin)")
      ->required();

  std::vector<std::string> oracle_files;
  std::string sweep = "forward";
  CLI::App* oracle = app.add_subcommand(
      "oracle", "naive fixpoint relation of one graph or a pair");
  oracle->add_option("graphs", oracle_files, "one or two graph files")
      ->expected(1, 2)
      ->required();
  oracle->add_flag("--matrix", flag_matrix, "dense matrix output");
  oracle->add_option("--sweep", sweep, "entry sweep order")
      ->check(CLI::IsMember({"forward", "backward"}));

  fzb::GenSpec spec;
  std::string degree_spec;
  CLI::App* gen =
      app.add_subcommand("gen", "generate a deterministic random graph");
  gen->add_option("--n", spec.n, "vertex count")->required();
  gen->add_option("--m", spec.m, "edge count");
  gen->add_option("--labels-v", spec.labels_v, "vertex label symbols");
  gen->add_option("--labels-e", spec.labels_e, "edge label symbols");
  gen->add_option("--degrees", degree_spec,
                  "degree pool: a count or a comma separated list");
  gen->add_option("--seed", spec.seed, "random seed");

  std::uint32_t n_min = 8192, n_max = 131072, density = 5;
  int reps = 3;
  fzb::GenSpec bench_base;
  bench_base.labels_v = 1;
  bench_base.labels_e = 2;
  bench_base.degree_count = 16;
  std::string bench_degrees;
  CLI::App* bench = app.add_subcommand(
      "bench", "time the engine across a doubling ladder of sizes");
  bench->add_option("--n-min", n_min, "smallest vertex count");
  bench->add_option("--n-max", n_max, "largest vertex count");
  bench->add_option("--density", density, "edges per vertex");
  bench->add_option("--labels-v", bench_base.labels_v, "vertex label symbols");
  bench->add_option("--labels-e", bench_base.labels_e, "edge label symbols");
  bench->add_option("--degrees", bench_degrees,
                    "degree pool: a count or a comma separated list");
  bench->add_option("--reps", reps, "repetitions per row (minimum is kept)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_base.seed, "random seed base");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(partition)) {
      return run_partition(graph_file, flag_json, flag_check, flag_trace);
    }
    if (app.got_subcommand(bisim)) {
      return run_bisim(graph_file, graph_file2, flag_matrix, flag_oracle);
    }
    if (app.got_subcommand(check)) {
      return run_check(graph_file);
    }
    if (app.got_subcommand(oracle)) {
      return run_oracle(oracle_files, flag_matrix,
                        sweep == "forward" ? fzb::SweepOrder::forward
                                           : fzb::SweepOrder::backward);
    }
    if (app.got_subcommand(gen)) {
      if (!degree_spec.empty()) apply_degree_spec(degree_spec, spec);
      return run_gen(spec);
    }
    if (app.got_subcommand(bench)) {
      if (!bench_degrees.empty()) apply_degree_spec(bench_degrees, bench_base);
      return run_bench(n_min, n_max, density, bench_base, reps);
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code;
  } catch (const fzb::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
