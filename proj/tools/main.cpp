// treenorm: exact evaluation of the tree norms X and Y, delta-condition
// solvers, witness-family generators and convexity probes.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "treenorm/conditions.hpp"
#include "treenorm/norm.hpp"
#include "treenorm/probe.hpp"
#include "treenorm/report.hpp"
#include "treenorm/witness.hpp"

namespace fs = std::filesystem;
using namespace treenorm;

namespace {

struct GlobalOptions {
  std::size_t max_node_length = 32;
  unsigned digits = 50;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

void maybe_write_report(const std::string& path, const Json& report) {
  if (!path.empty()) write_file(path, report.dump(2) + "\n");
}

std::vector<TreeVector> load_family_dir(const fs::path& dir,
                                        std::vector<std::string>* names = nullptr) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("'" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".vec")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<TreeVector> members;
  for (const fs::path& file : files) {
    members.push_back(load_vector(file));
    if (names) names->push_back(file.filename().string());
  }
  return members;
}

Json probe_report_json(const ProbeReport& report) {
  return Json{{"family_id", report.family_id},
              {"family_size", report.family_size},
              {"flavor", to_string(report.flavor)},
              {"mode", to_string(report.mode)},
              {"epsilon_actual",
               Json{{"sq", to_string(report.epsilon_sq)}, {"value", report.epsilon_actual}}},
              {"best_value",
               Json{{"sq", to_string(report.best_sq)}, {"value", report.best_value}}},
              {"delta_empirical", report.delta_empirical},
              {"index_i", report.best_i},
              {"index_j", report.best_j}};
}

void print_probe_report(const ProbeReport& report) {
  std::cout << "family " << report.family_id << " (" << report.family_size
            << " members, flavor " << to_string(report.flavor) << ", "
            << to_string(report.mode) << ")\n"
            << "  epsilon_actual  " << report.epsilon_actual << "  (sq "
            << to_string(report.epsilon_sq) << ")\n"
            << "  best_value      " << report.best_value << "  (sq "
            << to_string(report.best_sq) << ", pair " << report.best_i << ","
            << report.best_j << ")\n"
            << "  delta_empirical " << report.delta_empirical << "\n";
}

// ---- norm ----

struct NormArgs {
  std::string flavor, input, report_path;
  bool certificate = false, oracle_check = false;
  std::size_t oracle_bound = 10;
};

int run_norm(const NormArgs& args, const GlobalOptions& global) {
  Stopwatch watch;
  const Flavor flavor = parse_flavor(args.flavor);
  const TreeVector x = load_vector(args.input);
  const Rational sq = norm_sq(x, flavor);
  std::cout << render_sqrt(sq, global.digits) << "\n";

  Json results;
  results["norm"] = norm_value_json(sq, global.digits);
  results["support_size"] = x.support_size();

  if (args.certificate && !x.empty()) {
    const NormCertificate cert = best_chain_certificate(x, flavor);
    Json blocks = Json::array();
    for (std::size_t i = 0; i < cert.chain.blocks.size(); ++i) {
      const NodeSet& block = cert.chain.blocks[i];
      Json nodes = Json::array();
      for (const Node& node : block.nodes) nodes.push_back(node.str());
      blocks.push_back(Json{{"nodes", nodes},
                            {"witness_level", block.witness_level},
                            {"sum", to_string(cert.block_sums[i])}});
      std::cout << "block " << (i + 1) << " (witness level " << block.witness_level
                << ", sum " << to_string(cert.block_sums[i]) << "):";
      for (const Node& node : block.nodes) std::cout << " " << node.str();
      std::cout << "\n";
    }
    results["certificate"] = Json{{"blocks", blocks}, {"value_sq", to_string(cert.value_sq)}};
  }

  int exit_code = 0;
  if (args.oracle_check) {
    const Rational oracle = brute_force_norm_sq(x, flavor, args.oracle_bound);
    const bool match = oracle == sq;
    results["oracle"] = Json{{"value_sq", to_string(oracle)}, {"match", match}};
    if (match) {
      std::cout << "oracle: match\n";
    } else {
      std::cout << "oracle: MISMATCH engine=" << to_string(sq)
                << " oracle=" << to_string(oracle) << "\n";
      exit_code = 1;
    }
  }

  Json config{{"flavor", args.flavor},
              {"input", args.input},
              {"certificate", args.certificate},
              {"oracle_check", args.oracle_check},
              {"max_node_length", global.max_node_length}};
  maybe_write_report(args.report_path,
                     make_run_report("norm", config, results, global.digits, watch.ms()));
  return exit_code;
}

// ---- conditions ----

struct TwoBetaArgs {
  std::string epsilon, delta, tol = "1e-9", report_path;
  bool solve = false;
};

int run_two_beta(const TwoBetaArgs& args, const GlobalOptions& global) {
  Stopwatch watch;
  const Float50 eps = parse_float50(args.epsilon);
  Json results;
  if (args.solve) {
    const auto star = max_two_beta_delta(eps, parse_float50(args.tol));
    if (star) {
      std::cout << star->str(30) << "\n";
      results["delta_star"] = star->str(30);
    } else {
      std::cout << "none\n";
      results["delta_star"] = nullptr;
    }
  } else {
    const bool holds = check_two_beta_delta(eps, parse_float50(args.delta));
    std::cout << (holds ? "true" : "false") << "\n";
    results["holds"] = holds;
  }
  Json config{{"epsilon", args.epsilon},
              {"delta", args.solve ? Json(nullptr) : Json(args.delta)},
              {"solve", args.solve},
              {"tol", args.tol}};
  maybe_write_report(args.report_path, make_run_report("conditions two-beta", config,
                                                       results, global.digits, watch.ms()));
  return 0;
}

struct TwoNucArgs {
  std::string epsilon, delta, eta_minus, eta_plus, report_path;
};

int run_two_nuc(const TwoNucArgs& args, const GlobalOptions& global) {
  Stopwatch watch;
  const TwoNucCheck check = check_two_nuc_conditions(
      parse_float50(args.epsilon), parse_float50(args.delta),
      parse_float50(args.eta_minus), parse_float50(args.eta_plus));
  Json results;
  results["ok"] = check.ok;
  results["delta_prime"] = check.params.delta_prime.str(30);
  if (check.ok) {
    results["theta"] = check.params.theta.str(30);
    std::cout << "ok delta_prime=" << check.params.delta_prime.str(20)
              << " theta=" << check.params.theta.str(20) << "\n";
  } else {
    results["violated"] = check.violated;
    std::cout << "violated: " << check.violated << "\n";
  }
  Json config{{"epsilon", args.epsilon},
              {"delta", args.delta},
              {"eta_minus", args.eta_minus},
              {"eta_plus", args.eta_plus}};
  maybe_write_report(args.report_path, make_run_report("conditions two-nuc", config,
                                                       results, global.digits, watch.ms()));
  return 0;
}

struct ConditionSweepArgs {
  std::string eps_from, eps_to, tol = "1e-9", out;
  unsigned steps = 10;
};

int run_condition_sweep(const ConditionSweepArgs& args) {
  const Float50 from = parse_float50(args.eps_from);
  const Float50 to = parse_float50(args.eps_to);
  if (args.steps < 2) throw std::domain_error("need at least 2 sweep steps");
  std::vector<Float50> grid;
  for (unsigned k = 0; k < args.steps; ++k)
    grid.push_back(from + (to - from) * k / (args.steps - 1));
  std::string csv = "epsilon,delta_star\n";
  for (const DeltaSweepRow& row : delta_star_sweep(grid, parse_float50(args.tol))) {
    csv += row.epsilon.str(12) + ",";
    csv += row.delta_star ? row.delta_star->str(20) : "none";
    csv += "\n";
  }
  write_file(args.out, csv);
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

// ---- witness ----

struct AntichainArgs {
  std::size_t n = 0;
  std::string emit;
};

int run_antichain(const AntichainArgs& args) {
  const std::vector<Node> nodes = level_antichain(args.n);
  for (const Node& node : nodes) std::cout << node.str() << "\n";
  if (!args.emit.empty()) {
    fs::create_directories(args.emit);
    const TreeVector raw = TreeVector::indicator(nodes);
    save_vector(raw, fs::path(args.emit) / "antichain.vec");
  }
  return 0;
}

std::string pad_index(std::size_t i) {
  std::string s = std::to_string(i);
  return s.size() < 2 ? "0" + s : s;
}

struct SeparatedArgs {
  std::size_t n = 0, rounds = 2;
  std::string delta = "1/10", emit, scale = "both";
};

int run_separated(const SeparatedArgs& args) {
  const SeparatedFamily family =
      make_separated_family(args.n, args.rounds, parse_rational_or_decimal(args.delta));
  verify_separated_family(family);
  std::cout << "separated family: depth " << family.depth << ", "
            << family.rounds.size() << " rounds, scale " << to_string(family.scale)
            << ", levels";
  for (const SeparatedRound& round : family.rounds) std::cout << " " << round.level;
  std::cout << "\nall structural invariants verified\n";

  if (args.emit.empty()) return 0;
  fs::create_directories(args.emit);
  for (std::size_t r = 0; r < family.rounds.size(); ++r) {
    if (args.scale == "raw" || args.scale == "both")
      save_vector(family.unit_vectors[r], fs::path(args.emit) / ("raw_" + pad_index(r) + ".vec"));
    if (args.scale == "paper" || args.scale == "both")
      save_vector(family.scaled_vectors[r],
                  fs::path(args.emit) / ("scaled_" + pad_index(r) + ".vec"));
    if (args.scale == "unit") {
      Rational unit_scale = 1;
      for (std::size_t i = 0; i < family.depth; ++i) unit_scale /= 2;
      save_vector(unit_scale * family.unit_vectors[r],
                  fs::path(args.emit) / ("unit_" + pad_index(r) + ".vec"));
    }
  }
  Json manifest;
  manifest["family"] = "separated";
  manifest["depth"] = family.depth;
  manifest["delta"] = to_string(family.delta);
  manifest["scale"] = to_string(family.scale);
  Json rounds = Json::array();
  for (const SeparatedRound& round : family.rounds) {
    Json selected = Json::array(), main = Json::array(), side = Json::array();
    for (const Node& node : round.selected) selected.push_back(node.str());
    for (const Branch& b : round.main) main.push_back(to_string(b));
    for (const Branch& b : round.side) side.push_back(to_string(b));
    rounds.push_back(Json{{"level", round.level},
                          {"selected", selected},
                          {"main_branches", main},
                          {"side_branches", side}});
  }
  manifest["rounds"] = rounds;
  write_file(fs::path(args.emit) / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << args.emit << "\n";
  return 0;
}

struct YChainArgs {
  std::size_t m = 0, n = 1, p = 1, count = 2;
  std::string emit, scale = "both";
};

int run_y_chain(const YChainArgs& args) {
  const AcceptableChainFamily family =
      make_acceptable_chain_family(args.m, args.n, args.p, args.count);
  verify_acceptable_chain_family(family);
  std::cout << "acceptable chain family: m " << family.m << ", split level "
            << family.level << ", min level " << family.min_level << ", "
            << family.c_sets.size() << " chain sets\nall structural invariants verified\n";

  if (args.emit.empty()) return 0;
  fs::create_directories(args.emit);
  Rational unit_scale = 1;
  for (std::size_t i = 0; i < family.m; ++i) unit_scale /= 2;
  if (args.scale == "raw" || args.scale == "both") {
    save_vector(TreeVector::indicator(family.b_set), fs::path(args.emit) / "b.vec");
    for (std::size_t j = 0; j < family.c_sets.size(); ++j)
      save_vector(TreeVector::indicator(family.c_sets[j]),
                  fs::path(args.emit) / ("c_" + pad_index(j) + ".vec"));
  }
  if (args.scale == "unit" || args.scale == "both") {
    const char* prefix = args.scale == "both" ? "unit_c_" : "c_";
    for (std::size_t j = 0; j < family.c_sets.size(); ++j)
      save_vector(unit_scale * TreeVector::indicator(family.c_sets[j]),
                  fs::path(args.emit) / (prefix + pad_index(j) + ".vec"));
  }
  Json manifest;
  manifest["family"] = "y_chain";
  manifest["m"] = family.m;
  manifest["split_level"] = family.level;
  manifest["min_level"] = family.min_level;
  Json phi1 = Json::array(), phi2 = Json::array(), b = Json::array();
  for (const Node& node : family.phi1) phi1.push_back(node.str());
  for (const Node& node : family.phi2) phi2.push_back(node.str());
  for (const Node& node : family.b_set) b.push_back(node.str());
  manifest["phi1"] = phi1;
  manifest["phi2"] = phi2;
  manifest["b_set"] = b;
  Json csets = Json::array();
  for (const auto& cj : family.c_sets) {
    Json nodes = Json::array();
    for (const Node& node : cj) nodes.push_back(node.str());
    csets.push_back(nodes);
  }
  manifest["c_sets"] = csets;
  write_file(fs::path(args.emit) / "manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << args.emit << "\n";
  return 0;
}

// ---- probe ----

struct ProbePairArgs {
  std::string center, family, flavor, report_path;
};

int run_probe(const ProbePairArgs& args, const GlobalOptions& global, ProbeMode mode) {
  Stopwatch watch;
  const Flavor flavor = parse_flavor(args.flavor);
  const fs::path dir(args.family);
  const auto members = load_family_dir(dir);
  const std::string family_id = dir.filename().string();
  ProbeReport report;
  if (mode == ProbeMode::TwoBeta) {
    const TreeVector center = load_vector(args.center);
    report = probe_two_beta(center, members, flavor, family_id, global.digits);
  } else {
    report = probe_two_nuc(members, flavor, family_id, global.digits);
  }
  print_probe_report(report);
  Json config{{"family", args.family}, {"flavor", args.flavor}};
  if (mode == ProbeMode::TwoBeta) config["center"] = args.center;
  maybe_write_report(args.report_path,
                     make_run_report("probe " + to_string(mode), config,
                                     probe_report_json(report), global.digits, watch.ms()));
  return 0;
}

struct ProbeSweepArgs {
  std::string spec, out;
};

int run_probe_sweep(const ProbeSweepArgs& args) {
  std::ifstream in(args.spec);
  if (!in) throw std::runtime_error("cannot open '" + args.spec + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const SweepSpec spec = parse_sweep_spec(text);
  const SweepResult result = run_sweep(spec);
  for (const std::string& err : result.row_errors)
    std::cerr << "row failed: " << err << "\n";
  write_file(args.out, result.csv);
  std::cout << "wrote " << args.out << " (" << result.reports.size() << " rows";
  if (!result.row_errors.empty()) std::cout << ", " << result.row_errors.size() << " failed";
  std::cout << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact laboratory for the tree norms X and Y"};
  app.require_subcommand(1);

  GlobalOptions global;
  if (const char* env = std::getenv("TREENORM_DIGITS")) global.digits = std::atoi(env);
  app.add_option("--max-node-length", global.max_node_length,
                 "maximum allowed node length")
      ->capture_default_str();
  app.add_option("--digits", global.digits, "significant digits for decimal output")
      ->capture_default_str();

  // norm
  NormArgs norm_args;
  CLI::App* norm_cmd = app.add_subcommand("norm", "evaluate a norm exactly");
  norm_cmd->add_option("--flavor", norm_args.flavor, "X (admissible) or Y (acceptable)")
      ->required()
      ->check(CLI::IsMember({"X", "Y"}));
  norm_cmd->add_option("--input", norm_args.input, "vector file")->required();
  norm_cmd->add_flag("--certificate", norm_args.certificate, "print an optimal chain");
  norm_cmd->add_flag("--oracle-check", norm_args.oracle_check,
                     "cross-check against the brute-force oracle");
  norm_cmd->add_option("--oracle-bound", norm_args.oracle_bound,
                       "max support size for the oracle")
      ->capture_default_str();
  norm_cmd->add_option("--report", norm_args.report_path, "write a JSON run report");

  // conditions
  CLI::App* conditions_cmd =
      app.add_subcommand("conditions", "delta-condition checks and solvers");
  conditions_cmd->require_subcommand(1);

  TwoBetaArgs tb_args;
  CLI::App* tb_cmd = conditions_cmd->add_subcommand("two-beta", "the two-beta condition");
  tb_cmd->add_option("--epsilon", tb_args.epsilon, "separation parameter")->required();
  auto* tb_delta = tb_cmd->add_option("--delta", tb_args.delta, "candidate delta");
  auto* tb_solve =
      tb_cmd->add_flag("--solve", tb_args.solve, "bisect for the largest admissible delta");
  tb_delta->excludes(tb_solve);
  tb_cmd->add_option("--tol", tb_args.tol, "bisection tolerance")->capture_default_str();
  tb_cmd->add_option("--report", tb_args.report_path, "write a JSON run report");

  TwoNucArgs tn_args;
  CLI::App* tn_cmd = conditions_cmd->add_subcommand("two-nuc", "the two-NUC conditions");
  tn_cmd->add_option("--epsilon", tn_args.epsilon)->required();
  tn_cmd->add_option("--delta", tn_args.delta)->required();
  tn_cmd->add_option("--eta-minus", tn_args.eta_minus)->required();
  tn_cmd->add_option("--eta-plus", tn_args.eta_plus)->required();
  tn_cmd->add_option("--report", tn_args.report_path, "write a JSON run report");

  ConditionSweepArgs cs_args;
  CLI::App* cs_cmd =
      conditions_cmd->add_subcommand("sweep", "CSV of delta* over an epsilon grid");
  cs_cmd->add_option("--eps-from", cs_args.eps_from)->required();
  cs_cmd->add_option("--eps-to", cs_args.eps_to)->required();
  cs_cmd->add_option("--steps", cs_args.steps)->capture_default_str();
  cs_cmd->add_option("--tol", cs_args.tol)->capture_default_str();
  cs_cmd->add_option("--out", cs_args.out, "output CSV path")->required();

  // witness
  CLI::App* witness_cmd = app.add_subcommand("witness", "generate witness families");
  witness_cmd->require_subcommand(1);

  AntichainArgs ac_args;
  CLI::App* ac_cmd = witness_cmd->add_subcommand("antichain", "the 2^n nodes of length n");
  ac_cmd->add_option("--n", ac_args.n, "level")->required();
  ac_cmd->add_option("--emit", ac_args.emit, "directory for the indicator vector");

  SeparatedArgs sep_args;
  CLI::App* sep_cmd =
      witness_cmd->add_subcommand("separated", "separated-branch witness family");
  sep_cmd->add_option("--n", sep_args.n, "depth parameter (2^n slots)")->required();
  sep_cmd->add_option("--rounds", sep_args.rounds, "number of rounds")->required();
  sep_cmd->add_option("--delta", sep_args.delta, "modulus parameter in (0,1)")
      ->capture_default_str();
  sep_cmd->add_option("--emit", sep_args.emit, "directory for vectors and manifest");
  sep_cmd->add_option("--scale", sep_args.scale, "raw | paper | unit | both")
      ->check(CLI::IsMember({"raw", "paper", "unit", "both"}))
      ->capture_default_str();

  YChainArgs yc_args;
  CLI::App* yc_cmd =
      witness_cmd->add_subcommand("y-chain", "acceptable chain family for the Y norm");
  yc_cmd->add_option("--m", yc_args.m, "sets have 2^m nodes")->required();
  yc_cmd->add_option("--n", yc_args.n, "split level")->required();
  yc_cmd->add_option("--p", yc_args.p, "minimum node length")->required();
  yc_cmd->add_option("--count", yc_args.count, "number of chain sets")->required();
  yc_cmd->add_option("--emit", yc_args.emit, "directory for vectors and manifest");
  yc_cmd->add_option("--scale", yc_args.scale, "raw | unit | both")
      ->check(CLI::IsMember({"raw", "unit", "both"}))
      ->capture_default_str();

  // probe
  CLI::App* probe_cmd = app.add_subcommand("probe", "empirical convexity probes");
  probe_cmd->require_subcommand(1);

  ProbePairArgs pb_args;
  CLI::App* pb_cmd = probe_cmd->add_subcommand("two-beta", "best centered triple");
  pb_cmd->add_option("--center", pb_args.center, "center vector file")->required();
  pb_cmd->add_option("--family", pb_args.family, "directory of .vec members")->required();
  pb_cmd->add_option("--flavor", pb_args.flavor)->required()->check(CLI::IsMember({"X", "Y"}));
  pb_cmd->add_option("--report", pb_args.report_path, "write a JSON run report");

  ProbePairArgs pn_args;
  CLI::App* pn_cmd = probe_cmd->add_subcommand("two-nuc", "best pair");
  pn_cmd->add_option("--family", pn_args.family, "directory of .vec members")->required();
  pn_cmd->add_option("--flavor", pn_args.flavor)->required()->check(CLI::IsMember({"X", "Y"}));
  pn_cmd->add_option("--report", pn_args.report_path, "write a JSON run report");

  ProbeSweepArgs ps_args;
  CLI::App* ps_cmd = probe_cmd->add_subcommand("sweep", "CSV over a family grid");
  ps_cmd->add_option("--spec", ps_args.spec, "JSON sweep description")->required();
  ps_cmd->add_option("--out", ps_args.out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    set_max_node_length(global.max_node_length);
    if (global.digits == 0 || global.digits > 1000)
      throw std::domain_error("digits must lie in 1..1000");

    if (app.got_subcommand(norm_cmd)) return run_norm(norm_args, global);
    if (app.got_subcommand(conditions_cmd)) {
      if (conditions_cmd->got_subcommand(tb_cmd)) {
        if (!tb_args.solve && tb_args.delta.empty())
          throw UsageError("provide --delta or --solve");
        return run_two_beta(tb_args, global);
      }
      if (conditions_cmd->got_subcommand(tn_cmd)) return run_two_nuc(tn_args, global);
      if (conditions_cmd->got_subcommand(cs_cmd)) return run_condition_sweep(cs_args);
    }
    if (app.got_subcommand(witness_cmd)) {
      if (witness_cmd->got_subcommand(ac_cmd)) return run_antichain(ac_args);
      if (witness_cmd->got_subcommand(sep_cmd)) return run_separated(sep_args);
      if (witness_cmd->got_subcommand(yc_cmd)) return run_y_chain(yc_args);
    }
    if (app.got_subcommand(probe_cmd)) {
      if (probe_cmd->got_subcommand(pb_cmd))
        return run_probe(pb_args, global, ProbeMode::TwoBeta);
      if (probe_cmd->got_subcommand(pn_cmd))
        return run_probe(pn_args, global, ProbeMode::TwoNuc);
      if (probe_cmd->got_subcommand(ps_cmd)) return run_probe_sweep(ps_args);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
