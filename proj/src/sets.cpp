#include "treenorm/sets.hpp"

#include <algorithm>
#include <set>

namespace treenorm {

Flavor parse_flavor(std::string_view text) {
  if (text == "X" || text == "x") return Flavor::X;
  if (text == "Y" || text == "y") return Flavor::Y;
  throw std::invalid_argument("flavor must be X or Y, got '" + std::string(text) + "'");
}

std::string to_string(Flavor f) { return f == Flavor::X ? "X" : "Y"; }

std::string set_kind_name(Flavor f) {
  return f == Flavor::X ? "admissible" : "acceptable";
}

bool witnessed_at(std::span<const Node> nodes, std::size_t n, Flavor flavor) {
  std::set<Node> prefixes;
  for (const Node& node : nodes) {
    if (node.length() < n) return false;
    if (flavor == Flavor::Y && !on_spine(node, node.prefix(n))) return false;
    if (!prefixes.insert(node.prefix(n)).second) return false;
  }
  return true;
}

std::vector<std::size_t> witness_levels(std::span<const Node> nodes, Flavor flavor) {
  if (nodes.empty()) throw std::invalid_argument("empty node set");
  std::size_t min_len = nodes[0].length();
  for (const Node& node : nodes) min_len = std::min(min_len, node.length());
  std::vector<std::size_t> found;
  for (std::size_t n = 0; n <= min_len; ++n)
    if (witnessed_at(nodes, n, flavor)) found.push_back(n);
  return found;
}

namespace {
std::optional<std::size_t> min_length_witness(std::span<const Node> nodes, Flavor flavor) {
  if (nodes.empty()) throw std::invalid_argument("empty node set");
  std::size_t min_len = nodes[0].length();
  for (const Node& node : nodes) min_len = std::min(min_len, node.length());
  if (witnessed_at(nodes, min_len, flavor)) return min_len;
  return std::nullopt;
}
}  // namespace

std::optional<std::size_t> admissible_witness(std::span<const Node> nodes) {
  return min_length_witness(nodes, Flavor::X);
}

std::optional<std::size_t> acceptable_witness(std::span<const Node> nodes) {
  return min_length_witness(nodes, Flavor::Y);
}

std::optional<std::size_t> flavor_witness(std::span<const Node> nodes, Flavor flavor) {
  return min_length_witness(nodes, flavor);
}

std::size_t NodeSet::min_length() const {
  std::size_t m = nodes[0].length();
  for (const Node& n : nodes) m = std::min(m, n.length());
  return m;
}

std::size_t NodeSet::max_length() const {
  std::size_t m = nodes[0].length();
  for (const Node& n : nodes) m = std::max(m, n.length());
  return m;
}

NodeSet make_node_set(std::vector<Node> nodes, Flavor flavor) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto witness = flavor_witness(nodes, flavor);
  if (!witness)
    throw std::invalid_argument("node set is not " + set_kind_name(flavor));
  return NodeSet{std::move(nodes), flavor, *witness};
}

bool level_ordered(std::span<const Node> a, std::span<const Node> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("level order is defined for nonempty sets");
  std::size_t max_a = 0;
  for (const Node& n : a) max_a = std::max(max_a, n.length());
  std::size_t min_b = b[0].length();
  for (const Node& n : b) min_b = std::min(min_b, n.length());
  return max_a < min_b;
}

bool level_ordered(const NodeSet& a, const NodeSet& b) {
  return a.max_length() < b.min_length();
}

Chain validate_chain(const std::vector<std::vector<Node>>& blocks, Flavor flavor) {
  Chain chain;
  chain.flavor = flavor;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<Node> nodes = blocks[i];
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    if (nodes.empty())
      throw ChainError("block " + std::to_string(i + 1) + " is empty");
    auto witness = flavor_witness(nodes, flavor);
    if (!witness)
      throw ChainError("block " + std::to_string(i + 1) + " is not " +
                       set_kind_name(flavor));
    chain.blocks.push_back(NodeSet{std::move(nodes), flavor, *witness});
  }
  for (std::size_t i = 0; i + 1 < chain.blocks.size(); ++i)
    if (!level_ordered(chain.blocks[i], chain.blocks[i + 1]))
      throw ChainError("level order violated between blocks " +
                       std::to_string(i + 1) + " and " + std::to_string(i + 2));
  return chain;
}

}  // namespace treenorm
