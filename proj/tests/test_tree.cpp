#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "treenorm/tree.hpp"

using namespace treenorm;

namespace {

Node N(const char* text) { return Node::parse(text); }

// All nodes of length <= max_len, canonical order.
std::vector<Node> all_nodes(std::size_t max_len) {
  std::vector<Node> nodes{Node::root()};
  std::size_t begin = 0;
  for (std::size_t level = 0; level < max_len; ++level) {
    const std::size_t end = nodes.size();
    for (std::size_t i = begin; i < end; ++i) {
      nodes.push_back(nodes[i].child(0));
      nodes.push_back(nodes[i].child(1));
    }
    begin = end;
  }
  return nodes;
}

struct LengthLimitGuard {
  std::size_t saved = max_node_length();
  ~LengthLimitGuard() { set_max_node_length(saved); }
};

}  // namespace

TEST_CASE("node parsing") {
  CHECK(N("@").length() == 0);
  CHECK(N("@").is_root());
  CHECK(N("01").length() == 2);
  CHECK(N("01").digit(0) == 0);
  CHECK(N("01").digit(1) == 1);
  CHECK(N("01").str() == "01");
  CHECK(N("@").str() == "@");
  CHECK_THROWS_AS(Node::parse("0x1"), std::invalid_argument);
  CHECK_THROWS_AS(Node::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Node::parse("2"), std::invalid_argument);
}

TEST_CASE("node length limit") {
  LengthLimitGuard guard;
  set_max_node_length(4);
  CHECK_THROWS_AS(Node::parse("00000"), std::length_error);
  CHECK_THROWS_AS(N("0000").child(1), std::length_error);
  CHECK_THROWS_AS(set_max_node_length(0), std::invalid_argument);
}

TEST_CASE("prefix order examples") {
  CHECK(is_prefix(N("0"), N("01")));
  CHECK(!is_prefix(N("01"), N("00")));
  CHECK(is_prefix(N("@"), N("110")));  // the root precedes everything
}

TEST_CASE("prefix order is a partial order") {
  const auto nodes = all_nodes(8);
  for (const Node& a : nodes) CHECK(is_prefix(a, a));
  for (const Node& a : nodes)
    for (const Node& b : nodes)
      if (is_prefix(a, b) && is_prefix(b, a)) CHECK(a == b);
  // transitivity, exhaustive at a smaller depth
  const auto small = all_nodes(4);
  for (const Node& a : small)
    for (const Node& b : small) {
      if (!is_prefix(a, b)) continue;
      for (const Node& c : small)
        if (is_prefix(b, c)) CHECK(is_prefix(a, c));
    }
}

TEST_CASE("comparability") {
  CHECK(comparable(N("0"), N("01")));
  CHECK(!comparable(N("00"), N("01")));
  for (const Node& a : all_nodes(6)) CHECK(comparable(a, a));
}

TEST_CASE("subtree membership") {
  CHECK(in_subtree(N("0110"), N("01")));
  CHECK(!in_subtree(N("0"), N("01")));
  for (const Node& a : all_nodes(4)) CHECK(in_subtree(a, Node::root()));
}

TEST_CASE("spine membership") {
  CHECK(on_spine(N("0100"), N("01")));
  CHECK(!on_spine(N("011"), N("01")));
  for (const Node& a : all_nodes(5)) CHECK(on_spine(a, a));
  // spine implies subtree
  for (const Node& a : all_nodes(8))
    if (on_spine(a, N("01"))) CHECK(in_subtree(a, N("01")));
}

TEST_CASE("branch node_at_level") {
  const Branch b{N("01"), 0};
  CHECK(b.node_at_level(4) == N("0100"));
  CHECK(b.node_at_level(1) == N("0"));
  CHECK(b.node_at_level(2) == N("01"));
  CHECK(Branch{Node::root(), 1}.node_at_level(3) == N("111"));
  CHECK(Branch{Node::root(), 1}.node_at_level(0) == Node::root());
}

TEST_CASE("branch levels are nested") {
  const Branch branches[] = {{N("01"), 0}, {N("1"), 1}, {Node::root(), 0}};
  for (const Branch& b : branches)
    for (std::size_t n = 0; n <= 10; ++n)
      for (std::size_t m = n; m <= 10; ++m)
        CHECK(is_prefix(b.node_at_level(n), b.node_at_level(m)));
}

TEST_CASE("branch text round trip") {
  CHECK(to_string(parse_branch("01:0")) == "01:0");
  CHECK(to_string(parse_branch("@:1")) == "@:1");
  CHECK_THROWS_AS(parse_branch("01"), std::invalid_argument);
  CHECK_THROWS_AS(parse_branch("01:2"), std::invalid_argument);
}

TEST_CASE("branch path identity") {
  // Distinct representations of the same infinite path.
  CHECK(same_path(Branch{N("0"), 0}, Branch{N("00"), 0}));
  CHECK(same_path(Branch{Node::root(), 0}, Branch{N("00"), 0}));
  CHECK(!same_path(Branch{N("0"), 0}, Branch{N("0"), 1}));
  CHECK(!same_path(Branch{N("01"), 0}, Branch{N("00"), 0}));
}

TEST_CASE("branch separation") {
  const std::vector<Branch> apart{{N("0"), 0}, {N("1"), 0}};
  CHECK(separated_at_level(apart, 1));

  // Two representations of the all-zero path never separate.
  const std::vector<Branch> same{{N("0"), 0}, {N("00"), 0}};
  CHECK(!separated_at_level(same, 1));
  CHECK(!separated_at_level(same, 2));
  CHECK(!separated_at_level(same, 7));

  const std::vector<Branch> duplicate{{N("0"), 0}, {N("0"), 0}};
  CHECK_THROWS_AS(separated_at_level(duplicate, 1), std::invalid_argument);
}

TEST_CASE("separation is monotone in the level") {
  const std::vector<Branch> branches{{N("0"), 0}, {N("01"), 1}, {N("1"), 0}, {N("11"), 1}};
  for (std::size_t level = 0; level <= 10; ++level)
    if (separated_at_level(branches, level))
      for (std::size_t higher = level; higher <= 12; ++higher)
        CHECK(separated_at_level(branches, higher));
  CHECK(separated_at_level(branches, 3));
}

TEST_CASE("branch subtree selections") {
  const std::vector<Branch> branches{{N("0"), 0}, {N("1"), 0}};
  const std::vector<Node> good{N("00"), N("10")};
  const std::vector<Node> crossed{N("10"), N("00")};
  CHECK(in_branch_subtrees(good, branches, 1));
  CHECK(!in_branch_subtrees(crossed, branches, 1));
  // a level beyond every node length leaves the subtrees too deep
  CHECK(!in_branch_subtrees(good, branches, 3));

  const std::vector<Node> short_list{N("00")};
  CHECK_THROWS_AS(in_branch_subtrees(short_list, branches, 1), std::invalid_argument);
  const std::vector<Branch> unseparated{{N("0"), 0}, {N("00"), 0}};
  CHECK_THROWS_AS(in_branch_subtrees(good, unseparated, 1), std::invalid_argument);
}
