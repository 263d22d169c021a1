#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "treenorm/tree.hpp"

namespace treenorm {

// The two norms differ only in which block sets a chain may use:
//   X — admissible sets (one node per level-n subtree, for some witness n)
//   Y — acceptable sets (additionally every node lies on a level-n spine)
enum class Flavor { X, Y };

Flavor parse_flavor(std::string_view text);  // "X" or "Y"
std::string to_string(Flavor f);
// "admissible" / "acceptable" — how the flavor constrains block sets.
std::string set_kind_name(Flavor f);

// Witness check at one fixed level n (the definition's (a),(b) / (a'),(b')).
bool witnessed_at(std::span<const Node> nodes, std::size_t n, Flavor flavor);

// All witness levels in 0..min length, by exhaustive search. This is the
// definitional route; the fast paths below are pinned against it in tests.
std::vector<std::size_t> witness_levels(std::span<const Node> nodes, Flavor flavor);

// Fast path: if any witness exists, the minimum node length is one, so a
// single check suffices. Returns that witness, or nullopt. The empty set is
// rejected (the empty chain is the canonical zero certificate instead).
std::optional<std::size_t> admissible_witness(std::span<const Node> nodes);
std::optional<std::size_t> acceptable_witness(std::span<const Node> nodes);
std::optional<std::size_t> flavor_witness(std::span<const Node> nodes, Flavor flavor);

// A validated block: a nonempty node set together with the flavor it was
// checked against and a witness level.
struct NodeSet {
  std::vector<Node> nodes;  // sorted, unique, nonempty
  Flavor flavor = Flavor::X;
  std::size_t witness_level = 0;

  std::size_t min_length() const;
  std::size_t max_length() const;
};

// Builds a NodeSet, validating the flavor predicate. Throws on failure.
NodeSet make_node_set(std::vector<Node> nodes, Flavor flavor);

// a << b: every node of a is strictly shorter than every node of b.
bool level_ordered(const NodeSet& a, const NodeSet& b);
bool level_ordered(std::span<const Node> a, std::span<const Node> b);

struct ChainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An ordered list of same-flavor blocks A_1 << ... << A_k. The empty chain
// is valid and evaluates to 0.
struct Chain {
  Flavor flavor = Flavor::X;
  std::vector<NodeSet> blocks;

  std::size_t size() const { return blocks.size(); }
};

// Validates flavor membership of every block and << between consecutive
// blocks; throws ChainError naming the first violated constraint
// (blocks are numbered from 1 in diagnostics).
Chain validate_chain(const std::vector<std::vector<Node>>& blocks, Flavor flavor);

}  // namespace treenorm
