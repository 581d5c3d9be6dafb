#include "antipath/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <ostream>

#include "antipath/certificate.hpp"
#include "antipath/generators.hpp"
#include "antipath/graph_io.hpp"
#include "antipath/oracle.hpp"
#include "antipath/pathfinder.hpp"
#include "antipath/sweep.hpp"

namespace antipath {

namespace {

namespace fs = std::filesystem;

struct FindArgs {
  std::string graph;
  int k = 0;
  std::string orientation = "forward-first";
  bool dense = false;
  bool trust = false;
  std::string output;
};

struct VerifyArgs {
  std::string graph;
  std::string certificate;
};

struct OracleArgs {
  std::string graph;
  std::uint64_t budget = kDefaultBudget;
};

struct GenArgs {
  std::string kind;
  int k = 5;
  int copies = 1;
  int ell = 3;
  int s = 2;
  int n = 20;
  double p = 0.5;
  std::uint64_t seed = 1;
  bool shuffle = false;
  bool dot = false;
  std::string output;
};

struct StressArgs {
  std::string mode;
  int trials = -1;
  std::uint64_t seed = 1;
  int n = -1;
  int k = -1;
  bool serial = false;
  std::string bundle_dir = "stress-failures";
};

// Orientation of the file's edges is checked by the parser; find and oracle
// additionally need the graph to be free of 2-cycles.
OrientedGraph load_oriented(const std::string& path) {
  const Digraph d = read_graph_file(path);
  if (d.has_two_cycle()) throw std::runtime_error(path + ": graph has a 2-cycle; this command needs an oriented graph");
  return OrientedGraph(d);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_text_file(path, text);
}

int cmd_find(const FindArgs& a, std::ostream& out) {
  const auto orient = parse_orientation(a.orientation);
  if (!orient) throw std::runtime_error("--orientation must be forward-first or backward-first");
  const OrientedGraph g = load_oriented(a.graph);
  DriverOptions options;
  options.trust_hypothesis = a.trust;
  const SearchOutcome outcome = a.dense ? find_antipath_dense(g, a.k, *orient, options) : find_antipath(g, a.k, *orient, options);
  const std::string text = to_json_text(make_certificate(g, outcome, a.k, *orient));
  out << text;
  if (!a.output.empty()) write_text_file(a.output, text);
  if (std::holds_alternative<Found>(outcome)) return kExitOk;
  if (std::holds_alternative<NotGuaranteed>(outcome)) return kExitNotGuaranteed;
  return kExitViolation;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const Digraph g = read_graph_file(a.graph);
  const Certificate cert = parse_certificate(read_text_file(a.certificate));
  const Verdict verdict = verify_certificate(g, cert);
  if (!verdict.ok) {
    err << "REJECTED: " << verdict.message << "\n";
    return kExitError;
  }
  out << "OK: " << verdict.message << "\n";
  return kExitOk;
}

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const OrientedGraph g = load_oriented(a.graph);
  const OracleResult r = longest_antipath(g, a.budget);
  out << "max_length: " << r.max_length << (r.exact ? "" : " (lower bound)") << "\n";
  out << "exact: " << (r.exact ? "yes" : "no") << "\n";
  out << "expansions: " << r.expansions << "\n";
  out << "witness:";
  if (r.witness)
    for (Vertex v : r.witness->verts()) out << ' ' << v;
  out << "\n";
  out << "length forward-first backward-first\n";
  for (int len = 0; len <= r.max_length; ++len)
    out << len << ' ' << (r.realizes(len, Orientation::ForwardFirst) ? "yes" : "no") << ' '
        << (r.realizes(len, Orientation::BackwardFirst) ? "yes" : "no") << "\n";
  return r.exact ? kExitOk : kExitInexact;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Digraph g = [&]() -> Digraph {
    if (a.kind == "tournament-union")
      return gen_tournament_union(a.k, a.copies, a.shuffle ? std::optional<std::uint64_t>(a.seed) : std::nullopt);
    if (a.kind == "blowup") return gen_cycle_blowup(a.ell, a.s);
    if (a.kind == "random-tournament") {
      if (a.n < 0) throw GeneratorError("--n must be non-negative");
      return gen_random_tournament(a.n, a.seed);
    }
    if (a.kind == "random-oriented") {
      if (a.n < 0) throw GeneratorError("--n must be non-negative");
      if (!(a.p >= 0.0 && a.p <= 1.0)) throw GeneratorError("--p must lie in [0, 1]");
      return gen_random_oriented(a.n, a.p, a.seed);
    }
    throw GeneratorError("unknown generator '" + a.kind + "'");
  }();
  emit(a.dot ? to_dot(g) : emit_graph(g), a.output, out);
  return kExitOk;
}

void write_bundle(const fs::path& dir, const std::string& mode, const SweepFailure& f, std::ostream& err) {
  fs::create_directories(dir);
  const std::string stem = mode + "-" + std::to_string(f.index) + (f.trust_hypothesis ? "-trust" : "");
  const fs::path graph = dir / (stem + ".graph");
  write_text_file(graph, f.graph_text);
  std::string replay = "antipath find " + graph.string() + " -k " + std::to_string(f.k) + " --orientation " +
                       to_string(f.orientation) + (f.dense ? " --dense" : "") + (f.trust_hypothesis ? " --trust-hypothesis" : "");
  if (f.k == 0) replay = "antipath oracle " + graph.string();
  const nlohmann::json params = {{"mode", mode},
                                 {"index", f.index},
                                 {"seed", f.seed},
                                 {"k", f.k},
                                 {"orientation", to_string(f.orientation)},
                                 {"dense", f.dense},
                                 {"trust_hypothesis", f.trust_hypothesis},
                                 {"message", f.message},
                                 {"replay", replay}};
  write_text_file(dir / (stem + ".json"), params.dump(2) + "\n");
  err << "bundle: " << (dir / (stem + ".json")).string() << "\n";
}

int cmd_stress(const StressArgs& a, std::ostream& out, std::ostream& err) {
  const Execution exec = a.serial ? Execution::Serial : Execution::Parallel;
  std::vector<SweepReport> reports;
  if (a.mode == "exhaustive-n5") {
    const int n = a.n < 0 ? 5 : a.n;
    reports.push_back(sweep_exhaustive_find(n, a.k < 0 ? 3 : a.k, exec));
    reports.push_back(sweep_exhaustive_longest(n, 6, exec));
  } else if (a.mode == "random-tournaments") {
    reports.push_back(sweep_random_tournaments(a.n < 0 ? 21 : a.n, a.trials < 0 ? 200 : a.trials, a.seed, exec));
  } else if (a.mode == "dense") {
    reports.push_back(sweep_dense(a.n < 0 ? 40 : a.n, a.k < 0 ? 8 : a.k, a.trials < 0 ? 50 : a.trials, a.seed, exec));
  } else {
    throw std::runtime_error("unknown stress mode '" + a.mode + "'");
  }

  bool ok = true;
  for (const auto& r : reports) {
    out << r.summary() << "\n";
    if (r.ok()) continue;
    ok = false;
    const std::string tag = r.mode.substr(0, r.mode.find(' '));
    for (const auto& f : r.failures) {
      err << "FAILURE " << tag << " #" << f.index << ": " << f.message << "\n";
      if (!f.graph_text.empty()) write_bundle(a.bundle_dir, tag, f, err);
    }
  }
  return ok ? kExitOk : kExitError;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antidirected path search, certificates and experiments"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  FindArgs find;
  auto* find_cmd = app.add_subcommand("find", "Search for an antipath of length k; prints a certificate");
  find_cmd->add_option("graph", find.graph, "Graph file")->required();
  find_cmd->add_option("-k", find.k, "Path length (edges)")->required();
  find_cmd->add_option("--orientation", find.orientation, "forward-first or backward-first");
  find_cmd->add_flag("--dense", find.dense, "Use the edge-density driver");
  find_cmd->add_flag("--trust-hypothesis", find.trust, "Report step failures as violations without the degree precheck");
  find_cmd->add_option("-o,--output", find.output, "Also write the certificate to this file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
  verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
  verify_cmd->add_option("certificate", verify.certificate, "Certificate file")->required();

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive longest-antipath search");
  oracle_cmd->add_option("graph", oracle.graph, "Graph file")->required();
  oracle_cmd->add_option("--budget", oracle.budget, "Node-expansion budget");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("kind", gen.kind, "tournament-union, blowup, random-tournament or random-oriented")
      ->required()
      ->check(CLI::IsMember({"tournament-union", "blowup", "random-tournament", "random-oriented"}));
  gen_cmd->add_option("--k", gen.k, "Tournament order (tournament-union)");
  gen_cmd->add_option("--copies", gen.copies, "Number of copies (tournament-union)");
  gen_cmd->add_option("--ell", gen.ell, "Cycle length (blowup)");
  gen_cmd->add_option("--s", gen.s, "Class size (blowup)");
  gen_cmd->add_option("--n", gen.n, "Vertex count (random kinds)");
  gen_cmd->add_option("--p", gen.p, "Edge probability (random-oriented)");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--shuffle", gen.shuffle, "Relabel tournament-union vertices using --seed");
  gen_cmd->add_flag("--dot", gen.dot, "Write Graphviz instead of the graph format");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string dot_graph;
  auto* dot_cmd = app.add_subcommand("dot", "Render a graph file as Graphviz");
  dot_cmd->add_option("graph", dot_graph, "Graph file")->required();

  StressArgs stress;
  auto* stress_cmd = app.add_subcommand("stress", "Run a property sweep");
  stress_cmd->add_option("mode", stress.mode, "exhaustive-n5, random-tournaments or dense")
      ->required()
      ->check(CLI::IsMember({"exhaustive-n5", "random-tournaments", "dense"}));
  stress_cmd->add_option("--trials", stress.trials, "Number of trials");
  stress_cmd->add_option("--seed", stress.seed, "Base seed");
  stress_cmd->add_option("--n", stress.n, "Vertex count");
  stress_cmd->add_option("--k", stress.k, "Path length");
  stress_cmd->add_flag("--serial", stress.serial, "Run the serial reference instead of the OpenMP sweep");
  stress_cmd->add_option("--bundle-dir", stress.bundle_dir, "Directory for failure bundles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*find_cmd) return cmd_find(find, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*oracle_cmd) return cmd_oracle(oracle, out);
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*dot_cmd) {
      out << to_dot(read_graph_file(dot_graph));
      return kExitOk;
    }
    if (*stress_cmd) return cmd_stress(stress, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace antipath
