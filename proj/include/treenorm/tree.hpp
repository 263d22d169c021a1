#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treenorm {

// Runtime bound on node length. Operations that would create a longer node
// throw std::length_error. Default 32.
std::size_t max_node_length();
void set_max_node_length(std::size_t n);

// A node of the dyadic tree: a finite 0/1 digit path from the root. The
// root is the empty path and serializes as "@".
class Node {
 public:
  Node() = default;

  // Parses "@" (root) or a nonempty string over {0,1}.
  static Node parse(std::string_view text);

  static Node root() { return Node(); }

  std::size_t length() const { return bits_.size(); }
  bool is_root() const { return bits_.empty(); }

  // i-th digit, 0-based; i < length().
  int digit(std::size_t i) const { return bits_[i] - '0'; }

  // First n digits; n <= length().
  Node prefix(std::size_t n) const;

  // One level deeper along `digit` (0 or 1).
  Node child(int digit) const;

  // Extends by `count` copies of `digit`.
  Node extend(int digit, std::size_t count) const;

  std::string str() const { return bits_.empty() ? "@" : bits_; }

  bool operator==(const Node&) const = default;
  // Total order: by length, then digit string. Used for canonical listings
  // and deterministic tie-breaking only; the tree order is is_prefix().
  std::strong_ordering operator<=>(const Node& other) const {
    if (auto c = bits_.size() <=> other.bits_.size(); c != 0) return c;
    return bits_.compare(other.bits_) <=> 0;
  }

 private:
  explicit Node(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;  // chars '0'/'1'
};

// phi <= psi in the tree order: phi is an initial segment of psi.
bool is_prefix(const Node& phi, const Node& psi);

bool comparable(const Node& phi, const Node& psi);

// psi lies in the subtree rooted at `root`.
bool in_subtree(const Node& psi, const Node& root);

// psi lies on the spine of `root`: it extends `root` and every digit past
// position |root| is 0.
bool on_spine(const Node& psi, const Node& root);

// An infinite root-to-infinity path, represented as a finite stem followed
// by a constant tail digit. Distinct representations may denote the same
// path (e.g. stem "0"/tail 0 and stem "00"/tail 0); same_path() compares
// the underlying node sequences, operator== compares representations.
struct Branch {
  Node stem;
  int tail_digit = 0;

  // The unique length-n node on the path.
  Node node_at_level(std::size_t n) const;

  bool operator==(const Branch&) const = default;
};

bool same_path(const Branch& a, const Branch& b);

Branch parse_branch(std::string_view text);  // "<node>:<digit>"
std::string to_string(const Branch& b);

// True iff the level-L nodes of the branches are pairwise distinct.
// Branches that are equal as Branch values are rejected; distinct
// representations of one path are allowed and simply never separate.
bool separated_at_level(std::span<const Branch> branches, std::size_t level);

// (nodes[i]) is a valid selection for (branches[i]) at `level`: each node
// lies in the subtree rooted at its branch's level-L node. Requires equal
// list sizes and separated_at_level(branches, level).
bool in_branch_subtrees(std::span<const Node> nodes,
                        std::span<const Branch> branches, std::size_t level);

}  // namespace treenorm
