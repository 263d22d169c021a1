#include "treenorm/witness.hpp"

#include <stdexcept>
#include <string>

namespace treenorm {

namespace {
constexpr std::size_t kMaxAntichainExponent = 20;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("witness family invariant violated: " + what);
}
}  // namespace

std::vector<Node> level_antichain(std::size_t n) {
  if (n > kMaxAntichainExponent)
    throw std::invalid_argument("level antichain of 2^" + std::to_string(n) +
                                " nodes exceeds the size budget");
  if (n > max_node_length())
    throw std::length_error("level " + std::to_string(n) +
                            " exceeds the node length limit");
  std::vector<Node> nodes;
  nodes.reserve(std::size_t{1} << n);
  nodes.push_back(Node::root());
  for (std::size_t level = 0; level < n; ++level) {
    std::vector<Node> next;
    next.reserve(nodes.size() * 2);
    for (const Node& node : nodes) {
      next.push_back(node.child(0));
      next.push_back(node.child(1));
    }
    nodes = std::move(next);
  }
  return nodes;
}

SeparatedFamily make_separated_family(std::size_t n, std::size_t rounds,
                                      const Rational& delta) {
  if (rounds < 2) throw std::invalid_argument("need at least 2 rounds");
  if (!(delta > 0 && delta < 1))
    throw std::invalid_argument("delta must lie in (0, 1)");
  // Deepest node used: anchors descend two levels per round, selections one
  // more.
  const std::size_t deepest = n + 2 * (rounds - 1) + 1;
  if (deepest > max_node_length())
    throw std::length_error("construction needs nodes of length " +
                            std::to_string(deepest) +
                            ", beyond the configured maximum");

  SeparatedFamily family;
  family.depth = n;
  family.delta = delta;
  // (2(1-delta))^-n
  Rational base = 2 * (1 - delta);
  family.scale = 1;
  for (std::size_t i = 0; i < n; ++i) family.scale /= base;

  std::vector<Node> anchors = level_antichain(n);
  for (std::size_t r = 0; r < rounds; ++r) {
    SeparatedRound round;
    round.level = anchors[0].length() + 1;
    for (const Node& anchor : anchors) {
      round.main.push_back(Branch{anchor.child(1), 0});
      round.side.push_back(Branch{anchor, 0});
      round.selected.push_back(anchor.child(0));
    }
    family.rounds.push_back(std::move(round));
    if (r + 1 < rounds) {
      // Descend along the main branches past this round's level.
      for (Node& anchor : anchors) anchor = anchor.child(1).child(0);
    }
  }
  for (const SeparatedRound& round : family.rounds) {
    TreeVector unit = TreeVector::indicator(round.selected);
    family.scaled_vectors.push_back(family.scale * unit);
    family.unit_vectors.push_back(std::move(unit));
  }
  return family;
}

void verify_separated_family(const SeparatedFamily& family) {
  const std::size_t slots = std::size_t{1} << family.depth;
  require(family.rounds.size() >= 2, "at least two rounds");
  for (std::size_t r = 0; r < family.rounds.size(); ++r) {
    const SeparatedRound& round = family.rounds[r];
    require(round.main.size() == slots && round.side.size() == slots &&
                round.selected.size() == slots,
            "round " + std::to_string(r + 1) + " slot counts");
    // All 2^(n+1) branches of the round separate at the recorded level.
    std::vector<Branch> all = round.main;
    all.insert(all.end(), round.side.begin(), round.side.end());
    require(separated_at_level(all, round.level),
            "round " + std::to_string(r + 1) + " branch separation");
    // Selected nodes follow the side branches at that level.
    require(in_branch_subtrees(round.selected, round.side, round.level),
            "round " + std::to_string(r + 1) + " selection");
    if (r > 0)
      require(family.rounds[r - 1].level < round.level, "levels strictly increase");
  }
  // Later selections stay inside the earlier rounds' main-branch subtrees.
  for (std::size_t r = 0; r < family.rounds.size(); ++r)
    for (std::size_t s = 0; s < r; ++s) {
      const SeparatedRound& early = family.rounds[s];
      for (std::size_t i = 0; i < slots; ++i)
        require(in_subtree(family.rounds[r].selected[i],
                           early.main[i].node_at_level(early.level)),
                "round " + std::to_string(r + 1) +
                    " descends round " + std::to_string(s + 1));
    }
}

AcceptableChainFamily make_acceptable_chain_family(std::size_t m, std::size_t n,
                                                   std::size_t p, std::size_t count) {
  if (m + 1 > n) throw std::invalid_argument("need 2^(m+1) <= 2^n level-n nodes");
  if (p < n) throw std::invalid_argument("minimum level p must be at least n");
  if (count < 1) throw std::invalid_argument("need at least one chain set");
  const std::size_t deepest = p + count - 1;
  if (deepest > max_node_length())
    throw std::length_error("construction needs nodes of length " +
                            std::to_string(deepest) +
                            ", beyond the configured maximum");

  AcceptableChainFamily family;
  family.m = m;
  family.level = n;
  family.min_level = p;

  const std::vector<Node> level_nodes = level_antichain(n);
  const std::size_t half = std::size_t{1} << m;
  family.phi1.assign(level_nodes.begin(), level_nodes.begin() + half);
  family.phi2.assign(level_nodes.begin() + half, level_nodes.begin() + 2 * half);

  for (const Node& phi : family.phi1)
    family.b_set.push_back(phi.extend(0, p - n));
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<Node> cj;
    for (const Node& phi : family.phi2)
      cj.push_back(phi.extend(0, p - n + j));
    family.c_sets.push_back(std::move(cj));
  }
  return family;
}

void verify_acceptable_chain_family(const AcceptableChainFamily& family) {
  const std::size_t size = std::size_t{1} << family.m;
  require(family.b_set.size() == size, "B has 2^m nodes");
  auto check_set = [&](const std::vector<Node>& nodes, std::span<const Node> spines,
                       const std::string& name) {
    require(acceptable_witness(nodes).has_value(), name + " is acceptable");
    for (const Node& node : nodes) {
      bool on_some_spine = false;
      for (const Node& phi : spines) on_some_spine = on_some_spine || on_spine(node, phi);
      require(on_some_spine, name + " lies on the designated spines");
      require(node.length() >= family.min_level, name + " respects the minimum level");
    }
  };
  check_set(family.b_set, family.phi1, "B");
  for (std::size_t j = 0; j < family.c_sets.size(); ++j) {
    const std::string name = "C_" + std::to_string(j + 1);
    require(family.c_sets[j].size() == size, name + " has 2^m nodes");
    check_set(family.c_sets[j], family.phi2, name);
    if (j > 0)
      require(level_ordered(std::span<const Node>(family.c_sets[j - 1]),
                            std::span<const Node>(family.c_sets[j])),
              "C_" + std::to_string(j) + " << " + name);
  }
  // The union of B with any C_j is still acceptable at the split level.
  for (const auto& cj : family.c_sets) {
    std::vector<Node> merged = family.b_set;
    merged.insert(merged.end(), cj.begin(), cj.end());
    auto witness = witness_levels(merged, Flavor::Y);
    bool found = false;
    for (std::size_t w : witness) found = found || w == family.level;
    require(found, "B union C_j is acceptable at the split level");
  }
}

SeparationReport verify_separation(std::span<const TreeVector> vectors, Flavor flavor,
                                   const Rational& threshold) {
  if (vectors.size() < 2)
    throw std::invalid_argument("separation needs at least two vectors");
  SeparationReport report;
  report.threshold = threshold;
  bool first = true;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = i + 1; j < vectors.size(); ++j) {
      Rational dist_sq = norm_sq(vectors[i] - vectors[j], flavor);
      ++report.pairs_checked;
      if (first || dist_sq < report.min_dist_sq) {
        first = false;
        report.min_dist_sq = std::move(dist_sq);
        report.min_i = i;
        report.min_j = j;
      }
    }
  report.pass = threshold <= 0 || report.min_dist_sq >= threshold * threshold;
  return report;
}

}  // namespace treenorm
