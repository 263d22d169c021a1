#include "doctest.h"

#include <vector>

#include "treenorm/norm.hpp"
#include "treenorm/witness.hpp"

using namespace treenorm;

namespace {
Node N(const char* text) { return Node::parse(text); }
}

TEST_CASE("level antichains") {
  CHECK(level_antichain(0) == std::vector<Node>{Node::root()});
  CHECK(level_antichain(2) == std::vector<Node>({N("00"), N("01"), N("10"), N("11")}));
  CHECK_THROWS_AS(level_antichain(25), std::invalid_argument);

  for (std::size_t n = 0; n <= 6; ++n) {
    const auto nodes = level_antichain(n);
    const TreeVector chi = TreeVector::indicator(nodes);
    const Rational k(std::size_t{1} << n);
    CHECK(norm_sq(chi, Flavor::X) == k * k);
    CHECK(norm_sq(chi, Flavor::Y) == k * k);  // one-level sets are acceptable too
  }
}

TEST_CASE("separated family structure, smallest case") {
  const SeparatedFamily family = make_separated_family(0, 2, Rational(1, 10));
  verify_separated_family(family);
  REQUIRE(family.rounds.size() == 2);
  CHECK(family.rounds[0].level == 1);
  CHECK(family.rounds[1].level == 3);
  CHECK(family.rounds[0].selected == std::vector<Node>{N("0")});
  CHECK(family.rounds[1].selected == std::vector<Node>{N("100")});

  // The later selection pairs with the earlier one inside the earlier
  // round's separated subtrees: (xi_2, xi_1) follows (main_1, side_1) at L_1.
  const std::vector<Node> pair{family.rounds[1].selected[0], family.rounds[0].selected[0]};
  const std::vector<Branch> branches{family.rounds[0].main[0], family.rounds[0].side[0]};
  CHECK(in_branch_subtrees(pair, branches, family.rounds[0].level));

  // scale = (2(1-1/10))^-0 = 1 at depth 0
  CHECK(family.scale == 1);
  CHECK(make_separated_family(2, 2, Rational(1, 10)).scale == Rational(25, 81));
}

TEST_CASE("separated family invariants re-verify across parameters") {
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t rounds = 2; rounds <= 4; ++rounds) {
      const SeparatedFamily family = make_separated_family(n, rounds, Rational(1, 10));
      verify_separated_family(family);  // throws on violation
      CHECK(family.unit_vectors.size() == rounds);
    }
}

TEST_CASE("separated family pairwise distances at scale 1") {
  for (std::size_t n = 0; n <= 2; ++n) {
    const SeparatedFamily family = make_separated_family(n, 4, Rational(1, 10));
    const Rational expected_sq =
        Rational((std::size_t{1} << (n + 1)) * (std::size_t{1} << (n + 1)));
    for (std::size_t r = 0; r < family.unit_vectors.size(); ++r)
      for (std::size_t s = r + 1; s < family.unit_vectors.size(); ++s) {
        const TreeVector diff = family.unit_vectors[r] - family.unit_vectors[s];
        CHECK(norm_sq(diff, Flavor::X) == expected_sq);
        // the union of two rounds' selections is one admissible set
        std::vector<Node> merged = family.rounds[r].selected;
        merged.insert(merged.end(), family.rounds[s].selected.begin(),
                      family.rounds[s].selected.end());
        CHECK(admissible_witness(merged).has_value());
      }
  }
}

TEST_CASE("separated family rejects bad parameters") {
  CHECK_THROWS_AS(make_separated_family(0, 1, Rational(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(make_separated_family(0, 2, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(make_separated_family(1, 20, Rational(1, 10)), std::length_error);
}

TEST_CASE("acceptable chain family, smallest case") {
  const AcceptableChainFamily family = make_acceptable_chain_family(0, 1, 2, 2);
  verify_acceptable_chain_family(family);
  CHECK(family.b_set == std::vector<Node>{N("00")});
  REQUIRE(family.c_sets.size() == 2);
  CHECK(family.c_sets[0] == std::vector<Node>{N("10")});
  CHECK(family.c_sets[1] == std::vector<Node>{N("100")});
  CHECK(acceptable_witness(family.b_set).has_value());
  CHECK(level_ordered(std::span<const Node>(family.c_sets[0]),
                      std::span<const Node>(family.c_sets[1])));
}

TEST_CASE("acceptable chain family norms") {
  for (std::size_t m = 0; m <= 3; ++m) {
    const std::size_t n = m + 1;
    const AcceptableChainFamily family = make_acceptable_chain_family(m, n, n + 1, 3);
    verify_acceptable_chain_family(family);
    const Rational size(std::size_t{1} << m);

    // each chain set alone: one acceptable block
    for (const auto& cj : family.c_sets)
      CHECK(norm_sq(TreeVector::indicator(cj), Flavor::Y) == size * size);

    // B merges with any C_j into a single acceptable set at the split level
    for (const auto& cj : family.c_sets) {
      TreeVector merged = TreeVector::indicator(family.b_set);
      merged += TreeVector::indicator(cj);
      CHECK(norm_sq(merged, Flavor::Y) == 4 * size * size);
    }

    // two chain sets cannot merge (same spines), so blocks stay separate
    for (std::size_t i = 0; i < family.c_sets.size(); ++i)
      for (std::size_t j = i + 1; j < family.c_sets.size(); ++j) {
        TreeVector pair = TreeVector::indicator(family.c_sets[i]);
        pair += TreeVector::indicator(family.c_sets[j]);
        CHECK(norm_sq(pair, Flavor::Y) == 2 * size * size);
      }
  }
}

TEST_CASE("normalized chain family is separated with norm (1-delta)^-m") {
  const std::size_t m = 2;
  const AcceptableChainFamily family = make_acceptable_chain_family(m, 3, 4, 3);
  const Rational delta(1, 10);
  Rational scale = 1;
  for (std::size_t i = 0; i < m; ++i) scale /= (2 * (1 - delta));
  std::vector<TreeVector> normalized;
  for (const auto& cj : family.c_sets)
    normalized.push_back(scale * TreeVector::indicator(cj));

  // ||scale * chi|| = 2^m * scale = (1-delta)^-m
  Rational expected = 1;
  for (std::size_t i = 0; i < m; ++i) expected /= (1 - delta);
  for (const TreeVector& v : normalized)
    CHECK(norm_sq(v, Flavor::Y) == expected * expected);

  // pairwise distance sqrt(2) * (1-delta)^-m
  const SeparationReport report =
      verify_separation(normalized, Flavor::Y, Rational(0));
  CHECK(report.min_dist_sq == 2 * expected * expected);
}

TEST_CASE("acceptable chain family rejects bad parameters") {
  CHECK_THROWS_AS(make_acceptable_chain_family(1, 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_acceptable_chain_family(0, 1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_acceptable_chain_family(0, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_acceptable_chain_family(0, 1, 30, 10), std::length_error);
}

TEST_CASE("separation reports") {
  const TreeVector a = TreeVector::indicator(level_antichain(1));
  CHECK_THROWS_AS(verify_separation(std::vector<TreeVector>{a}, Flavor::X, Rational(1)),
                  std::invalid_argument);

  const std::vector<TreeVector> twins{a, a};
  const SeparationReport degenerate = verify_separation(twins, Flavor::X, Rational(1, 2));
  CHECK(degenerate.min_dist_sq == 0);
  CHECK(!degenerate.pass);

  const SeparatedFamily family = make_separated_family(1, 3, Rational(1, 10));
  const SeparationReport separated =
      verify_separation(family.unit_vectors, Flavor::X, Rational(4));
  CHECK(separated.min_dist_sq == 16);  // 2^(n+1) = 4 at n = 1
  CHECK(separated.pass);
  CHECK(separated.pairs_checked == 3);
}
