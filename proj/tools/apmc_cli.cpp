// Command-line surface: graph IO, instance generators, the three all-pairs
// algorithms with witness output, the randomized vertex-connectivity solver,
// the 4-clique reduction generators, and a cross-check harness.
//
// Exit codes: 0 ok, 2 usage/parse error, 3 structural precondition (cyclic
// input for DAG-only algorithms, bad generator parameters), 4 verification
// divergence.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "apmc/apmc_iterative.hpp"
#include "apmc/apmc_recursive.hpp"
#include "apmc/clique.hpp"
#include "apmc/cuts.hpp"
#include "apmc/flow.hpp"
#include "apmc/gen.hpp"
#include "apmc/io.hpp"
#include "apmc/netcoding.hpp"
#include "apmc/parallel.hpp"
#include "json.hpp"

namespace {

using namespace apmc;
using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitStructural = 3;
constexpr int kExitDivergence = 4;

MultiDigraph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_graph(in);
}

FourPartiteGraph load_4partite(const std::string& path) {
  if (path == "-") return parse_4partite(std::cin);
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_4partite(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

std::string cell(int value, int k) {
  if (value < 0) return "-";
  if (value > k) return ">" + std::to_string(k);
  return std::to_string(value);
}

std::string render_values(const std::vector<std::vector<int>>& m, int k,
                          const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (const auto& row : m) {
      json r = json::array();
      for (int v : row) r.push_back(cell(v, k));
      rows.push_back(r);
    }
    json out{{"n", m.size()}, {"k", k}, {"rows", rows}};
    return out.dump() + "\n";
  }
  std::ostringstream out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? "\t" : "") << cell(row[j], k);
    out << "\n";
  }
  return out.str();
}

// Pair values via the bounded flow oracle, parallel over pairs.
std::vector<std::vector<int>> oracle_matrix(const MultiDigraph& g, int k, int jobs) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  int n = g.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
  parallel_for(static_cast<std::size_t>(n) * n, jobs, [&](std::size_t idx) {
    int s = static_cast<int>(idx) / n, t = static_cast<int>(idx) % n;
    if (s != t) m[s][t] = max_flow_bounded(g, s, t, k + 1).value;
  });
  return m;
}

struct ValuesConfig {
  std::string input = "-";
  std::string algo = "iterative";
  std::string format = "tsv";
  std::string output;
  int k = 2;
  uint64_t seed = 1;
  bool vertex_capacities = false;
  bool strict_codes = false;
  int jobs = 0;  // 0 = all cores
};

int run_values(const ValuesConfig& cfg) {
  MultiDigraph g = load_graph(cfg.input);
  MultiDigraph work = cfg.vertex_capacities ? split_vertices(g) : g;

  auto project = [&](auto&& value_of) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (s == t) continue;
        m[s][t] = cfg.vertex_capacities ? value_of(split_out(s), split_in(t))
                                        : value_of(s, t);
      }
    return m;
  };

  std::vector<std::vector<int>> matrix;
  if (cfg.algo == "oracle") {
    auto full = oracle_matrix(work, cfg.k, cfg.jobs);
    matrix = project([&](int s, int t) { return full[s][t]; });
  } else if (cfg.algo == "iterative" || cfg.algo == "recursive") {
    ApmcTable table;
    if (cfg.algo == "iterative") {
      table = all_pairs_latest_cuts(work, cfg.k);
    } else {
      RecursiveOptions opts;
      opts.strict_codes = cfg.strict_codes;
      table = all_pairs_latest_cuts_recursive(work, cfg.k, opts);
    }
    matrix = project([&](int s, int t) { return table.value(s, t); });
  } else if (cfg.algo == "netcoding") {
    // Vertex-capacitated by construction; the flag only affects the others.
    // Cap at k+1 so values above k render as the >k marker like every other
    // algorithm.
    ConnectivityReport report = kapmvc(g, cfg.k + 1, cfg.seed);
    int n = g.vertex_count();
    matrix.assign(n, std::vector<int>(n, -1));
    for (const auto& [pair, value] : report.values) matrix[pair.first][pair.second] = value;
  } else {
    throw CLI::ValidationError("unknown algorithm " + cfg.algo);
  }
  write_output(cfg.output, render_values(matrix, cfg.k, cfg.format));
  return 0;
}

int run_witnesses(const ValuesConfig& cfg) {
  if (cfg.algo != "iterative" && cfg.algo != "recursive")
    throw CLI::ValidationError("witnesses needs --algo iterative|recursive");
  MultiDigraph g = load_graph(cfg.input);
  MultiDigraph work = cfg.vertex_capacities ? split_vertices(g) : g;
  ApmcTable table;
  if (cfg.algo == "recursive") {
    RecursiveOptions opts;
    opts.strict_codes = cfg.strict_codes;
    table = all_pairs_latest_cuts_recursive(work, cfg.k, opts);
  } else {
    table = all_pairs_latest_cuts(work, cfg.k);
  }
  json pairs = json::object();
  int n = g.vertex_count();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      const CutFamily& fam = cfg.vertex_capacities
                                 ? table.at(split_out(s), split_in(t))
                                 : table.at(s, t);
      json cuts = json::array();
      for (const ArcSet& c : fam.cuts) cuts.push_back(c);
      pairs[std::to_string(s) + "->" + std::to_string(t)] = cuts;
    }
  write_output(cfg.output, pairs.dump() + "\n");
  return 0;
}

struct GenConfig {
  std::string family = "random-dag";
  std::string output;
  int n = 8;
  int m = 14;
  int depth = 3;
  int mult = 5;
  double p = 0.5;
  uint64_t seed = 1;
};

int run_gen(const GenConfig& cfg) {
  if (cfg.family == "tree") {
    if (cfg.depth < 1 || cfg.mult < 1) throw CLI::ValidationError("bad tree parameters");
    write_output(cfg.output, format_graph(gen_tree_gadget(cfg.depth, cfg.mult).graph));
  } else if (cfg.family == "random-dag") {
    write_output(cfg.output, format_graph(gen_random_dag(cfg.n, cfg.m, cfg.seed)));
  } else if (cfg.family == "random-digraph") {
    write_output(cfg.output, format_graph(gen_random_digraph(cfg.n, cfg.m, cfg.seed)));
  } else if (cfg.family == "clique4") {
    write_output(cfg.output, format_4partite(gen_random_4partite(cfg.n, cfg.p, cfg.seed)));
  } else {
    throw CLI::ValidationError("unknown family " + cfg.family);
  }
  return 0;
}

struct NetcodingConfig {
  std::string input = "-";
  std::string output;
  int k = 3;
  uint64_t seed = 1;
  std::vector<int> sources, sinks;
};

int run_netcoding(const NetcodingConfig& cfg) {
  MultiDigraph g = load_graph(cfg.input);
  std::vector<int> sources = cfg.sources, sinks = cfg.sinks;
  if (sources.empty())
    for (int v = 0; v < g.vertex_count(); ++v) sources.push_back(v);
  if (sinks.empty())
    for (int v = 0; v < g.vertex_count(); ++v) sinks.push_back(v);
  ConnectivityReport report = kstmvc(g, sources, sinks, cfg.k, cfg.seed);
  std::ostringstream out;
  for (int s : sources) {
    bool first = true;
    for (int t : sinks) {
      out << (first ? "" : "\t");
      first = false;
      if (s == t)
        out << "-";
      else
        out << report.values.at({s, t});
    }
    out << "\n";
  }
  write_output(cfg.output, out.str());
  return 0;
}

struct CliqueConfig {
  std::string input = "-";
  std::string output;
  std::string mode = "unbounded";
  std::string solver = "flow";
  int k = 2;
  int i = 0;
  int j = 0;
  uint64_t seed = 1;
};

VertexConnectivitySolver make_solver(const CliqueConfig& cfg) {
  if (cfg.solver == "flow") return flow_nc_solver();
  if (cfg.solver == "netcoding") {
    uint64_t seed = cfg.seed;
    return [seed](const MultiDigraph& h, int a, int d) {
      int bound = 2 * h.vertex_count() + 1;
      return kstmvc(h, {a}, {d}, bound, seed).values.at({a, d});
    };
  }
  if (cfg.solver == "iterative") {
    return [](const MultiDigraph& h, int a, int d) {
      MultiDigraph split = split_vertices(h);
      int bound = 2 * h.vertex_count() + 1;
      ApmcTable table = all_pairs_latest_cuts(split, bound);
      return table.value(split_out(a), split_in(d));
    };
  }
  throw CLI::ValidationError("unknown solver");
}

int run_reduce_clique(const CliqueConfig& cfg) {
  FourPartiteGraph g4 = load_4partite(cfg.input);
  if (cfg.mode == "unbounded") {
    write_output(cfg.output, format_graph(build_h(g4)));
  } else if (cfg.mode == "bounded") {
    BoundedBlock block = build_h_bounded(g4, cfg.k, cfg.i, cfg.j);
    write_output(cfg.output, format_graph(block.h));
  } else {
    throw CLI::ValidationError("unknown mode " + cfg.mode);
  }
  return 0;
}

int run_decide_clique(const CliqueConfig& cfg) {
  FourPartiteGraph g4 = load_4partite(cfg.input);
  VertexConnectivitySolver solver = make_solver(cfg);
  bool found = cfg.mode == "bounded" ? decide_4clique_bounded(g4, cfg.k, solver)
                                     : decide_4clique_unbounded(g4, solver);
  std::cout << (found ? "clique" : "no-clique") << "\n";
  return 0;
}

struct VerifyConfig {
  uint64_t seed = 1;
  int instances = 20;
  int n = 8;
  int m = 14;
  int kmax = 2;
  int jobs = 1;
};

// Cross-checks every route: flow oracle vs. iterative vs. recursive values
// and families, witness validity, netcoding vs. the oracle, and the clique
// decisions vs. brute force. Prints the first divergence and exits 4.
int run_verify(const VerifyConfig& cfg) {
  for (int i = 0; i < cfg.instances; ++i) {
    uint64_t seed = cfg.seed + static_cast<uint64_t>(i);
    MultiDigraph g = gen_random_dag(cfg.n, cfg.m, seed, 3);
    for (int k = 1; k <= cfg.kmax; ++k) {
      ApmcTable it = all_pairs_latest_cuts(g, k);
      ApmcTable rec = all_pairs_latest_cuts_recursive(g, k);
      auto oracle = oracle_matrix(g, k, cfg.jobs);
      if (it.value_matrix() != oracle || rec.value_matrix() != oracle) {
        std::cerr << "divergence: values differ on dag seed=" << seed << " k=" << k
                  << "\n";
        return kExitDivergence;
      }
      for (int s = 0; s < cfg.n; ++s)
        for (int t = 0; t < cfg.n; ++t) {
          if (s == t) continue;
          if (it.at(s, t).cuts != rec.at(s, t).cuts) {
            std::cerr << "divergence: families differ at (" << s << "," << t
                      << ") seed=" << seed << " k=" << k << "\n";
            return kExitDivergence;
          }
          for (const ArcSet& cut : it.at(s, t).cuts) {
            if (cut.empty()) continue;
            if (reachable_from(g, s, cut)[t]) {
              std::cerr << "divergence: reported witness is not a cut\n";
              return kExitDivergence;
            }
          }
        }
    }
    MultiDigraph dg = gen_random_digraph(cfg.n, cfg.m, seed, 2);
    for (int k = 1; k <= cfg.kmax; ++k) {
      ConnectivityReport report = kapmvc(dg, k, seed);
      bool mismatch = false;
      for (const auto& [pair, value] : report.values)
        if (value != vertex_connectivity_bounded(dg, pair.first, pair.second, k))
          mismatch = true;
      if (mismatch) {
        ConnectivityReport retry = kapmvc(dg, k, seed + 900001);
        for (const auto& [pair, value] : retry.values)
          if (value != vertex_connectivity_bounded(dg, pair.first, pair.second, k)) {
            std::cerr << "divergence: netcoding twice off at seed=" << seed
                      << " k=" << k << "\n";
            return kExitDivergence;
          }
      }
    }
    FourPartiteGraph g4 = gen_random_4partite(3 + static_cast<int>(seed % 3), 0.5, seed);
    bool brute = find_4clique_bruteforce(g4).has_value();
    if (decide_4clique_unbounded(g4, flow_nc_solver()) != brute ||
        decide_4clique_bounded(g4, 2, flow_nc_solver()) != brute) {
      std::cerr << "divergence: clique decision differs at seed=" << seed << "\n";
      return kExitDivergence;
    }
  }
  std::cout << "verify: all routes agree (" << cfg.instances << " instances)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-bounded all-pairs min-cut toolkit"};
  app.require_subcommand(1);

  ValuesConfig values_cfg;
  auto add_common = [&](CLI::App* cmd, ValuesConfig& cfg) {
    cmd->add_option("-i,--input", cfg.input, "graph file (- for stdin)");
    cmd->add_option("-k,--k", cfg.k, "cut size bound")->check(CLI::PositiveNumber);
    cmd->add_option("-o,--output", cfg.output, "output file");
    cmd->add_option("--format", cfg.format, "tsv|json");
    cmd->add_option("--seed", cfg.seed, "seed for randomized algorithms");
    cmd->add_option("--jobs", cfg.jobs, "parallelism degree (0 = all cores, 1 = sequential)");
    cmd->add_flag("--vertex-capacities", cfg.vertex_capacities,
                  "solve with unit vertex capacities");
    cmd->add_flag("--strict-codes", cfg.strict_codes,
                  "fail instead of falling back when code limits are exceeded");
  };
  CLI::App* values = app.add_subcommand("values", "all-pairs k-capped min-cut matrix");
  add_common(values, values_cfg);
  values->add_option("--algo", values_cfg.algo, "oracle|iterative|recursive|netcoding");

  ValuesConfig wit_cfg;
  CLI::App* witnesses = app.add_subcommand("witnesses", "latest <=k-cut families as JSON");
  add_common(witnesses, wit_cfg);
  witnesses->add_option("--algo", wit_cfg.algo, "iterative|recursive");

  GenConfig gen_cfg;
  CLI::App* gen = app.add_subcommand("gen", "emit generated instances");
  gen->add_option("--family", gen_cfg.family, "tree|random-dag|random-digraph|clique4")
      ->required();
  gen->add_option("--n", gen_cfg.n, "vertex / per-side count");
  gen->add_option("--m", gen_cfg.m, "arc count");
  gen->add_option("--depth", gen_cfg.depth, "tree depth");
  gen->add_option("--mult", gen_cfg.mult, "leaf arc multiplicity");
  gen->add_option("--p", gen_cfg.p, "edge probability");
  gen->add_option("--seed", gen_cfg.seed, "generator seed");
  gen->add_option("-o,--output", gen_cfg.output, "output file");

  NetcodingConfig net_cfg;
  CLI::App* net = app.add_subcommand("netcoding", "randomized vertex connectivities");
  net->add_option("-i,--input", net_cfg.input, "graph file (- for stdin)");
  net->add_option("-k,--k", net_cfg.k, "connectivity cap")->check(CLI::PositiveNumber);
  net->add_option("--seed", net_cfg.seed, "coefficient seed");
  net->add_option("--sources", net_cfg.sources, "source vertices (default all)");
  net->add_option("--sinks", net_cfg.sinks, "sink vertices (default all)");
  net->add_option("-o,--output", net_cfg.output, "output file");

  CliqueConfig reduce_cfg;
  CLI::App* reduce = app.add_subcommand("reduce-clique", "emit the 4-clique reduction H");
  reduce->add_option("-i,--input", reduce_cfg.input, "4-partite file (- for stdin)");
  reduce->add_option("--mode", reduce_cfg.mode, "unbounded|bounded");
  reduce->add_option("-k,--k", reduce_cfg.k, "block size for bounded mode");
  reduce->add_option("--block-i", reduce_cfg.i, "A-side block index");
  reduce->add_option("--block-j", reduce_cfg.j, "D-side block index");
  reduce->add_option("-o,--output", reduce_cfg.output, "output file");

  CliqueConfig decide_cfg;
  CLI::App* decide = app.add_subcommand("decide-clique", "end-to-end 4-clique decision");
  decide->add_option("-i,--input", decide_cfg.input, "4-partite file (- for stdin)");
  decide->add_option("--mode", decide_cfg.mode, "unbounded|bounded");
  decide->add_option("-k,--k", decide_cfg.k, "block size for bounded mode");
  decide->add_option("--solver", decide_cfg.solver, "flow|netcoding|iterative");
  decide->add_option("--seed", decide_cfg.seed, "seed for the netcoding solver");

  VerifyConfig verify_cfg;
  CLI::App* verify = app.add_subcommand("verify", "cross-check all solver routes");
  verify->add_option("--seed", verify_cfg.seed, "base seed");
  verify->add_option("--instances", verify_cfg.instances, "instances per suite");
  verify->add_option("--n", verify_cfg.n, "vertices per instance");
  verify->add_option("--m", verify_cfg.m, "arcs per instance");
  verify->add_option("--kmax", verify_cfg.kmax, "largest k to check");
  verify->add_option("--jobs", verify_cfg.jobs, "parallelism degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  try {
    if (values->parsed()) return run_values(values_cfg);
    if (witnesses->parsed()) return run_witnesses(wit_cfg);
    if (gen->parsed()) return run_gen(gen_cfg);
    if (net->parsed()) return run_netcoding(net_cfg);
    if (reduce->parsed()) return run_reduce_clique(reduce_cfg);
    if (decide->parsed()) return run_decide_clique(decide_cfg);
    if (verify->parsed()) return run_verify(verify_cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CyclicGraphError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const LimitExceededError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const std::invalid_argument& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kExitStructural;
  }
  return 0;
}
