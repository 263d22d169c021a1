#include "treenorm/tree.hpp"

#include <atomic>
#include <stdexcept>

namespace treenorm {

namespace {
std::atomic<std::size_t> g_max_node_length{32};

void check_length(std::size_t n) {
  if (n > max_node_length())
    throw std::length_error("node length " + std::to_string(n) +
                            " exceeds configured maximum " +
                            std::to_string(max_node_length()));
}
}  // namespace

std::size_t max_node_length() { return g_max_node_length.load(); }

void set_max_node_length(std::size_t n) {
  if (n == 0) throw std::invalid_argument("max node length must be positive");
  g_max_node_length.store(n);
}

Node Node::parse(std::string_view text) {
  if (text == "@") return Node();
  if (text.empty())
    throw std::invalid_argument("empty node text (the root must be written '@')");
  for (char c : text)
    if (c != '0' && c != '1')
      throw std::invalid_argument("invalid digit '" + std::string(1, c) +
                                  "' in node '" + std::string(text) + "'");
  check_length(text.size());
  return Node(std::string(text));
}

Node Node::prefix(std::size_t n) const {
  if (n > bits_.size()) throw std::out_of_range("prefix longer than node");
  return Node(bits_.substr(0, n));
}

Node Node::child(int digit) const {
  if (digit != 0 && digit != 1) throw std::invalid_argument("digit must be 0 or 1");
  check_length(bits_.size() + 1);
  return Node(bits_ + static_cast<char>('0' + digit));
}

Node Node::extend(int digit, std::size_t count) const {
  if (digit != 0 && digit != 1) throw std::invalid_argument("digit must be 0 or 1");
  check_length(bits_.size() + count);
  return Node(bits_ + std::string(count, static_cast<char>('0' + digit)));
}

bool is_prefix(const Node& phi, const Node& psi) {
  if (phi.length() > psi.length()) return false;
  for (std::size_t i = 0; i < phi.length(); ++i)
    if (phi.digit(i) != psi.digit(i)) return false;
  return true;
}

bool comparable(const Node& phi, const Node& psi) {
  return is_prefix(phi, psi) || is_prefix(psi, phi);
}

bool in_subtree(const Node& psi, const Node& root) { return is_prefix(root, psi); }

bool on_spine(const Node& psi, const Node& root) {
  if (!is_prefix(root, psi)) return false;
  for (std::size_t i = root.length(); i < psi.length(); ++i)
    if (psi.digit(i) != 0) return false;
  return true;
}

Node Branch::node_at_level(std::size_t n) const {
  if (n <= stem.length()) return stem.prefix(n);
  return stem.extend(tail_digit, n - stem.length());
}

bool same_path(const Branch& a, const Branch& b) {
  const std::size_t depth = std::max(a.stem.length(), b.stem.length());
  return a.tail_digit == b.tail_digit &&
         a.node_at_level(depth) == b.node_at_level(depth);
}

Branch parse_branch(std::string_view text) {
  auto colon = text.rfind(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("branch text must be '<node>:<tail digit>'");
  Node stem = Node::parse(text.substr(0, colon));
  auto tail = text.substr(colon + 1);
  if (tail != "0" && tail != "1")
    throw std::invalid_argument("branch tail digit must be 0 or 1");
  return Branch{std::move(stem), tail[0] - '0'};
}

std::string to_string(const Branch& b) {
  return b.stem.str() + ":" + std::to_string(b.tail_digit);
}

bool separated_at_level(std::span<const Branch> branches, std::size_t level) {
  for (std::size_t i = 0; i < branches.size(); ++i)
    for (std::size_t j = i + 1; j < branches.size(); ++j)
      if (branches[i] == branches[j])
        throw std::invalid_argument("duplicate branch at positions " +
                                    std::to_string(i) + " and " + std::to_string(j));
  for (std::size_t i = 0; i < branches.size(); ++i)
    for (std::size_t j = i + 1; j < branches.size(); ++j)
      if (branches[i].node_at_level(level) == branches[j].node_at_level(level))
        return false;
  return true;
}

bool in_branch_subtrees(std::span<const Node> nodes,
                        std::span<const Branch> branches, std::size_t level) {
  if (nodes.size() != branches.size())
    throw std::invalid_argument("node and branch lists must have equal length");
  if (!separated_at_level(branches, level))
    throw std::invalid_argument("branches are not separated at level " +
                                std::to_string(level));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!in_subtree(nodes[i], branches[i].node_at_level(level))) return false;
  return true;
}

}  // namespace treenorm
