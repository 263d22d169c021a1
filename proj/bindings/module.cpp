#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "treenorm/conditions.hpp"
#include "treenorm/norm.hpp"
#include "treenorm/probe.hpp"
#include "treenorm/witness.hpp"

namespace py = pybind11;
using namespace treenorm;

namespace {

// The python surface works on plain strings and dicts: nodes are their text
// form, rationals are "p/q" strings (or decimals on input), vectors are
// {node: rational} dicts. Exactness survives the boundary.

std::vector<Node> to_nodes(const std::vector<std::string>& texts) {
  std::vector<Node> nodes;
  nodes.reserve(texts.size());
  for (const std::string& t : texts) nodes.push_back(Node::parse(t));
  return nodes;
}

std::vector<std::string> from_nodes(const std::vector<Node>& nodes) {
  std::vector<std::string> texts;
  texts.reserve(nodes.size());
  for (const Node& n : nodes) texts.push_back(n.str());
  return texts;
}

TreeVector to_vector(const py::dict& entries) {
  TreeVector v;
  for (const auto& [key, value] : entries) {
    const Node node = Node::parse(py::cast<std::string>(key));
    Rational coeff;
    if (py::isinstance<py::int_>(value))
      coeff = Rational(BigInt(py::cast<std::string>(py::str(value))));
    else
      coeff = parse_rational_or_decimal(py::cast<std::string>(py::str(value)));
    v.set(node, coeff);
  }
  return v;
}

py::dict from_vector(const TreeVector& v) {
  py::dict entries;
  for (const auto& [node, coeff] : v) entries[py::str(node.str())] = to_string(coeff);
  return entries;
}

std::vector<TreeVector> to_family(const std::vector<py::dict>& dicts) {
  std::vector<TreeVector> family;
  family.reserve(dicts.size());
  for (const py::dict& d : dicts) family.push_back(to_vector(d));
  return family;
}

py::dict probe_report_dict(const ProbeReport& report) {
  py::dict out;
  out["family_id"] = report.family_id;
  out["flavor"] = to_string(report.flavor);
  out["mode"] = to_string(report.mode);
  out["epsilon_sq"] = to_string(report.epsilon_sq);
  out["epsilon_actual"] = report.epsilon_actual;
  out["best_sq"] = to_string(report.best_sq);
  out["best_value"] = report.best_value;
  out["delta_empirical"] = report.delta_empirical;
  out["indices"] = py::make_tuple(report.best_i, report.best_j);
  return out;
}

VecQ to_vecq(const std::vector<std::string>& entries) {
  VecQ v;
  v.reserve(entries.size());
  for (const std::string& e : entries) v.push_back(parse_rational_or_decimal(e));
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact evaluation of the tree norms X and Y with witness "
            "generators, convexity probes and delta-condition solvers.";

  // tree order
  m.def("parse_node", [](const std::string& s) { return Node::parse(s).str(); },
        py::arg("text"), "Validate and normalize a node ('@' is the root).");
  m.def("node_length", [](const std::string& s) { return Node::parse(s).length(); });
  m.def("is_prefix", [](const std::string& a, const std::string& b) {
    return is_prefix(Node::parse(a), Node::parse(b));
  });
  m.def("comparable", [](const std::string& a, const std::string& b) {
    return comparable(Node::parse(a), Node::parse(b));
  });
  m.def("in_subtree", [](const std::string& node, const std::string& root) {
    return in_subtree(Node::parse(node), Node::parse(root));
  });
  m.def("on_spine", [](const std::string& node, const std::string& root) {
    return on_spine(Node::parse(node), Node::parse(root));
  });
  m.def("node_at_level",
        [](const std::string& stem, int tail, std::size_t level) {
          return Branch{Node::parse(stem), tail}.node_at_level(level).str();
        },
        py::arg("stem"), py::arg("tail_digit"), py::arg("level"));
  m.def("max_node_length", &max_node_length);
  m.def("set_max_node_length", &set_max_node_length);

  // set predicates
  m.def("admissible_witness", [](const std::vector<std::string>& nodes) {
    return admissible_witness(to_nodes(nodes));
  });
  m.def("acceptable_witness", [](const std::vector<std::string>& nodes) {
    return acceptable_witness(to_nodes(nodes));
  });
  m.def("witness_levels",
        [](const std::vector<std::string>& nodes, const std::string& flavor) {
          return witness_levels(to_nodes(nodes), parse_flavor(flavor));
        });
  m.def("validate_chain",
        [](const std::vector<std::vector<std::string>>& blocks, const std::string& flavor) {
          std::vector<std::vector<Node>> node_blocks;
          for (const auto& b : blocks) node_blocks.push_back(to_nodes(b));
          const Chain chain = validate_chain(node_blocks, parse_flavor(flavor));
          std::vector<std::size_t> witnesses;
          for (const NodeSet& block : chain.blocks) witnesses.push_back(block.witness_level);
          return witnesses;
        },
        "Validate a chain of blocks; returns per-block witness levels.");

  // norms
  m.def("norm_sq", [](const py::dict& vec, const std::string& flavor) {
    return to_string(norm_sq(to_vector(vec), parse_flavor(flavor)));
  });
  m.def("norm",
        [](const py::dict& vec, const std::string& flavor, unsigned digits) {
          return norm_decimal(to_vector(vec), parse_flavor(flavor), digits);
        },
        py::arg("vec"), py::arg("flavor"), py::arg("digits") = 50);
  m.def("brute_force_norm_sq",
        [](const py::dict& vec, const std::string& flavor, std::size_t bound) {
          return to_string(brute_force_norm_sq(to_vector(vec), parse_flavor(flavor), bound));
        },
        py::arg("vec"), py::arg("flavor"), py::arg("support_bound") = 10);
  m.def("best_chain", [](const py::dict& vec, const std::string& flavor) {
    const NormCertificate cert = best_chain_certificate(to_vector(vec), parse_flavor(flavor));
    py::list blocks;
    for (const NodeSet& block : cert.chain.blocks)
      blocks.append(from_nodes(block.nodes));
    py::dict out;
    out["blocks"] = blocks;
    py::list sums;
    for (const Rational& s : cert.block_sums) sums.append(to_string(s));
    out["block_sums"] = sums;
    out["value_sq"] = to_string(cert.value_sq);
    return out;
  });
  m.def("parse_vector_text",
        [](const std::string& text) { return from_vector(parse_vector_text(text)); });
  m.def("format_vector",
        [](const py::dict& vec) { return format_vector(to_vector(vec)); });
  m.def("sqrt_decimal",
        [](const std::string& q, unsigned digits) {
          return sqrt_decimal(parse_rational_or_decimal(q), digits);
        },
        py::arg("value"), py::arg("digits") = 50);

  // witness constructions
  m.def("level_antichain",
        [](std::size_t n) { return from_nodes(level_antichain(n)); });
  m.def("separated_family",
        [](std::size_t n, std::size_t rounds, const std::string& delta) {
          const SeparatedFamily family =
              make_separated_family(n, rounds, parse_rational_or_decimal(delta));
          verify_separated_family(family);
          py::dict out;
          out["depth"] = family.depth;
          out["scale"] = to_string(family.scale);
          py::list round_list, unit_list;
          for (const SeparatedRound& round : family.rounds) {
            py::dict r;
            r["level"] = round.level;
            r["selected"] = from_nodes(round.selected);
            std::vector<std::string> mains, sides;
            for (const Branch& b : round.main) mains.push_back(to_string(b));
            for (const Branch& b : round.side) sides.push_back(to_string(b));
            r["main_branches"] = mains;
            r["side_branches"] = sides;
            round_list.append(r);
          }
          for (const TreeVector& v : family.unit_vectors) unit_list.append(from_vector(v));
          out["rounds"] = round_list;
          out["unit_vectors"] = unit_list;
          return out;
        },
        py::arg("n"), py::arg("rounds"), py::arg("delta") = "1/10");
  m.def("acceptable_chain_family",
        [](std::size_t m_, std::size_t n, std::size_t p, std::size_t count) {
          const AcceptableChainFamily family = make_acceptable_chain_family(m_, n, p, count);
          verify_acceptable_chain_family(family);
          py::dict out;
          out["m"] = family.m;
          out["split_level"] = family.level;
          out["min_level"] = family.min_level;
          out["phi1"] = from_nodes(family.phi1);
          out["phi2"] = from_nodes(family.phi2);
          out["b_set"] = from_nodes(family.b_set);
          py::list csets;
          for (const auto& cj : family.c_sets) csets.append(from_nodes(cj));
          out["c_sets"] = csets;
          return out;
        },
        py::arg("m"), py::arg("n"), py::arg("p"), py::arg("count"));
  m.def("verify_separation",
        [](const std::vector<py::dict>& family, const std::string& flavor,
           const std::string& threshold) {
          const auto vectors = to_family(family);
          const SeparationReport report = verify_separation(
              vectors, parse_flavor(flavor), parse_rational_or_decimal(threshold));
          py::dict out;
          out["min_dist_sq"] = to_string(report.min_dist_sq);
          out["min_pair"] = py::make_tuple(report.min_i, report.min_j);
          out["pairs_checked"] = report.pairs_checked;
          out["pass"] = report.pass;
          return out;
        });

  // probes
  m.def("probe_two_beta",
        [](const py::dict& center, const std::vector<py::dict>& family,
           const std::string& flavor, const std::string& family_id) {
          return probe_report_dict(probe_two_beta(to_vector(center), to_family(family),
                                                  parse_flavor(flavor), family_id));
        },
        py::arg("center"), py::arg("family"), py::arg("flavor"),
        py::arg("family_id") = "");
  m.def("probe_two_nuc",
        [](const std::vector<py::dict>& family, const std::string& flavor,
           const std::string& family_id) {
          return probe_report_dict(
              probe_two_nuc(to_family(family), parse_flavor(flavor), family_id));
        },
        py::arg("family"), py::arg("flavor"), py::arg("family_id") = "");
  m.def("run_sweep", [](const std::string& spec_json) {
    const SweepResult result = run_sweep(parse_sweep_spec(spec_json));
    py::dict out;
    out["csv"] = result.csv;
    out["row_errors"] = result.row_errors;
    return out;
  });

  // delta conditions
  m.def("check_two_beta_delta",
        [](const std::string& epsilon, const std::string& delta) {
          return check_two_beta_delta(parse_float50(epsilon), parse_float50(delta));
        });
  m.def("max_two_beta_delta",
        [](const std::string& epsilon, const std::string& tol) -> std::optional<std::string> {
          const auto star = max_two_beta_delta(parse_float50(epsilon), parse_float50(tol));
          if (!star) return std::nullopt;
          return star->str(30);
        },
        py::arg("epsilon"), py::arg("tol") = "1e-9");
  m.def("check_two_nuc_conditions",
        [](const std::string& epsilon, const std::string& delta,
           const std::string& eta_minus, const std::string& eta_plus) {
          const TwoNucCheck check =
              check_two_nuc_conditions(parse_float50(epsilon), parse_float50(delta),
                                       parse_float50(eta_minus), parse_float50(eta_plus));
          py::dict out;
          out["ok"] = check.ok;
          out["delta_prime"] = check.params.delta_prime.str(30);
          if (check.ok)
            out["theta"] = check.params.theta.str(30);
          else
            out["violated"] = check.violated;
          return out;
        });
  m.def("lemma_check",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b,
           const std::vector<std::string>& c, const std::string& delta) {
          const LemmaResult r =
              l2_lemma_check(to_vecq(a), to_vecq(b), to_vecq(c),
                             parse_rational_or_decimal(delta));
          py::dict out;
          out["status"] = r.status == LemmaStatus::HypothesisFailed ? "hypothesis_failed"
                          : r.status == LemmaStatus::ConclusionHolds
                              ? "conclusion_holds"
                              : "COUNTEREXAMPLE";
          out["max_dist_sq"] = to_string(r.max_dist_sq);
          out["bound_sq"] = to_string(r.bound_sq);
          return out;
        });
  m.def("parallelogram_gap",
        [](const std::vector<std::string>& u, const std::vector<std::string>& v) {
          return to_string(parallelogram_gap(to_vecq(u), to_vecq(v)));
        });

  m.attr("__version__") = "0.1.0";
}
