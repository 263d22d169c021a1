#include "doctest.h"

#include <vector>

#include "treenorm/norm.hpp"
#include "treenorm/rng.hpp"

using namespace treenorm;

namespace {

Node N(const char* text) { return Node::parse(text); }

std::vector<Node> nodes_from(std::initializer_list<const char*> texts) {
  std::vector<Node> nodes;
  for (const char* t : texts) nodes.push_back(N(t));
  return nodes;
}

TreeVector indicator(std::initializer_list<const char*> texts) {
  const auto nodes = nodes_from(texts);
  return TreeVector::indicator(nodes);
}

TreeVector random_vector(Rng& rng, long max_len, long support, long bound) {
  TreeVector v;
  for (long s = 0; s < support; ++s) {
    Node node = Node::root();
    const long len = rng.range(0, max_len);
    for (long b = 0; b < len; ++b) node = node.child(static_cast<int>(rng.below(2)));
    long num = rng.range(-bound, bound);
    if (num == 0) num = 1;
    v.set(node, Rational(num, rng.range(1, bound)));
  }
  return v;
}

}  // namespace

TEST_CASE("chain evaluation examples") {
  const TreeVector x0 = indicator({"0"});
  const Chain single = validate_chain({nodes_from({"0"})}, Flavor::X);
  auto [sums1, sq1] = evaluate_chain(x0, single);
  CHECK(sums1 == std::vector<Rational>{1});
  CHECK(sq1 == 1);

  const TreeVector x = indicator({"0", "00"});
  const Chain two = validate_chain({nodes_from({"0"}), nodes_from({"00"})}, Flavor::X);
  auto [sums2, sq2] = evaluate_chain(x, two);
  CHECK(sums2 == std::vector<Rational>({1, 1}));
  CHECK(sq2 == 2);

  TreeVector signed_vec;
  signed_vec.set(N("0"), 3);
  signed_vec.set(N("1"), -4);
  const Chain level1 = validate_chain({nodes_from({"0", "1"})}, Flavor::X);
  auto [sums3, sq3] = evaluate_chain(signed_vec, level1);
  CHECK(sums3 == std::vector<Rational>{7});  // absolute values
  CHECK(sq3 == 49);
}

TEST_CASE("block profiles") {
  const Chain chain = validate_chain({nodes_from({"0"}), nodes_from({"00"})}, Flavor::X);
  CHECK(block_profile(TreeVector{}, chain).sums == std::vector<Rational>({0, 0}));
  CHECK(block_profile(indicator({"00"}), chain).sums == std::vector<Rational>({0, 1}));
}

TEST_CASE("block profiles are subadditive, additive on matching signs") {
  Rng rng(5);
  const Chain chain =
      validate_chain({nodes_from({"0", "1"}), nodes_from({"00", "10"})}, Flavor::X);
  for (int iter = 0; iter < 100; ++iter) {
    const TreeVector x = random_vector(rng, 2, 3, 9);
    const TreeVector y = random_vector(rng, 2, 3, 9);
    const auto px = block_profile(x, chain).sums;
    const auto py = block_profile(y, chain).sums;
    const auto pxy = block_profile(x + y, chain).sums;
    for (std::size_t i = 0; i < pxy.size(); ++i) CHECK(pxy[i] <= px[i] + py[i]);

    // matching signs: x and 2x
    const auto p2x = block_profile(x + x, chain).sums;
    for (std::size_t i = 0; i < p2x.size(); ++i) CHECK(p2x[i] == 2 * px[i]);
  }
}

TEST_CASE("norm squared examples") {
  TreeVector singleton;
  singleton.set(N("011"), Rational(-7, 3));
  CHECK(norm_sq(singleton, Flavor::X) == Rational(49, 9));
  CHECK(norm_sq(singleton, Flavor::Y) == Rational(49, 9));

  CHECK(norm_sq(indicator({"0", "1"}), Flavor::X) == 4);
  CHECK(norm_sq(indicator({"0", "1"}), Flavor::Y) == 4);

  // X merges {"1","01"} into one admissible block; Y cannot put them on a
  // common spine family, so the best chain is two singleton blocks.
  CHECK(norm_sq(indicator({"1", "01"}), Flavor::X) == 4);
  CHECK(norm_sq(indicator({"1", "01"}), Flavor::Y) == 2);

  CHECK(norm_sq(TreeVector{}, Flavor::X) == 0);
  CHECK(norm_sq(TreeVector{}, Flavor::Y) == 0);

  // An antichain that is not admissible: the optimum splits levels.
  CHECK(norm_sq(indicator({"0", "10", "11"}), Flavor::X) == 5);
}

TEST_CASE("norm decimals") {
  CHECK(norm_decimal(indicator({"0", "1"}), Flavor::X, 5) == "2.0000");
  CHECK(norm_decimal(indicator({"0", "00"}), Flavor::X, 50) ==
        "1.4142135623730950488016887242096980785696718753769");
  CHECK(norm_decimal(TreeVector{}, Flavor::X) == "0");
}

TEST_CASE("window subsets") {
  const TreeVector stacked = indicator({"0", "00"});
  const WindowSubset w1 = best_window_subset(stacked, 1, 2, Flavor::X);
  CHECK(w1.weight == 1);
  CHECK(w1.nodes.size() == 1);  // comparable nodes never share a block

  const TreeVector level2 = indicator({"00", "01", "10"});
  const WindowSubset w2 = best_window_subset(level2, 2, 2, Flavor::X);
  CHECK(w2.weight == 3);
  CHECK(w2.nodes == nodes_from({"00", "01", "10"}));

  const WindowSubset w3 = best_window_subset(indicator({"1", "01"}), 1, 2, Flavor::Y);
  CHECK(w3.weight == 1);
  CHECK(w3.nodes.size() == 1);

  const WindowSubset w4 = best_window_subset(TreeVector{}, 0, 3, Flavor::X);
  CHECK(w4.weight == 0);
  CHECK(w4.nodes.empty());

  CHECK_THROWS_AS(best_window_subset(level2, 3, 1, Flavor::X), std::invalid_argument);
}

TEST_CASE("certificates reproduce the norm") {
  const NormCertificate flat = best_chain_certificate(indicator({"0", "1"}), Flavor::X);
  CHECK(flat.value_sq == 4);
  CHECK(flat.chain.blocks.size() == 1);
  CHECK(flat.chain.blocks[0].nodes == nodes_from({"0", "1"}));

  const NormCertificate stacked = best_chain_certificate(indicator({"0", "00"}), Flavor::X);
  CHECK(stacked.value_sq == 2);
  CHECK(stacked.chain.blocks.size() == 2);
  CHECK(stacked.chain.blocks[0].nodes == nodes_from({"0"}));
  CHECK(stacked.chain.blocks[1].nodes == nodes_from({"00"}));

  TreeVector singleton;
  singleton.set(N("10"), Rational(2, 7));
  const NormCertificate one = best_chain_certificate(singleton, Flavor::Y);
  CHECK(one.chain.blocks.size() == 1);
  CHECK(one.value_sq == Rational(4, 49));

  CHECK_THROWS_AS(best_chain_certificate(TreeVector{}, Flavor::X), std::invalid_argument);
}

TEST_CASE("certificates re-evaluate exactly on random vectors") {
  Rng rng(17);
  for (int iter = 0; iter < 120; ++iter) {
    const TreeVector x = random_vector(rng, 4, 5, 9);
    if (x.empty()) continue;
    for (Flavor flavor : {Flavor::X, Flavor::Y}) {
      const NormCertificate cert = best_chain_certificate(x, flavor);
      auto [sums, value_sq] = evaluate_chain(x, cert.chain);
      CHECK(sums == cert.block_sums);
      CHECK(value_sq == cert.value_sq);
      CHECK(value_sq == norm_sq(x, flavor));
    }
  }
}

TEST_CASE("oracle agreement on the pinned examples") {
  CHECK(brute_force_norm_sq(indicator({"0", "1"}), Flavor::X) == 4);
  CHECK(brute_force_norm_sq(indicator({"0", "00"}), Flavor::X) == 2);
  CHECK(brute_force_norm_sq(indicator({"1", "01"}), Flavor::Y) == 2);
  CHECK(brute_force_norm_sq(indicator({"0", "10", "11"}), Flavor::X) == 5);
  CHECK(brute_force_norm_sq(TreeVector{}, Flavor::X) == 0);

  TreeVector big;
  for (const char* t : {"0", "1", "00", "01", "10", "11", "000", "001", "010", "011", "100"})
    big.set(N(t), 1);
  CHECK_THROWS_AS(brute_force_norm_sq(big, Flavor::X), std::invalid_argument);
}

TEST_CASE("engine matches the oracle on random vectors") {
  Rng rng(23);
  for (int iter = 0; iter < 150; ++iter) {
    const TreeVector x = random_vector(rng, 4, 6, 10);
    for (Flavor flavor : {Flavor::X, Flavor::Y})
      CHECK(norm_sq(x, flavor) == brute_force_norm_sq(x, flavor));
  }
}

TEST_CASE("engine matches the oracle on every depth-2 indicator") {
  // all 127 nonempty indicators over the 7 nodes of length <= 2
  std::vector<Node> pool;
  pool.push_back(N("@"));
  for (const char* t : {"0", "1", "00", "01", "10", "11"}) pool.push_back(N(t));
  for (unsigned mask = 1; mask < 128; ++mask) {
    TreeVector x;
    for (unsigned b = 0; b < 7; ++b)
      if (mask & (1u << b)) x.set(pool[b], 1);
    for (Flavor flavor : {Flavor::X, Flavor::Y})
      CHECK(norm_sq(x, flavor) == brute_force_norm_sq(x, flavor));
  }
}

TEST_CASE("engine stays exact for huge coefficients") {
  const Rational big(BigInt("123456789012345678901234567890"),
                     BigInt("987654321098765432109"));
  TreeVector x;
  x.set(N("0"), big);
  x.set(N("1"), -big);
  CHECK(norm_sq(x, Flavor::X) == 4 * big * big);
  TreeVector stacked;  // comparable nodes: two singleton blocks
  stacked.set(N("1"), big);
  stacked.set(N("10"), big + 1);
  CHECK(norm_sq(stacked, Flavor::X) == big * big + (big + 1) * (big + 1));
  CHECK(norm_sq(stacked, Flavor::X) == brute_force_norm_sq(stacked, Flavor::X));
}

TEST_CASE("norm sandwich") {
  Rng rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const TreeVector x = random_vector(rng, 5, 6, 10);
    const Rational y_sq = norm_sq(x, Flavor::Y);
    const Rational x_sq = norm_sq(x, Flavor::X);
    const Rational l1 = x.l1();
    CHECK(x.l2_sq() <= y_sq);
    CHECK(y_sq <= x_sq);
    CHECK(x_sq <= l1 * l1);
  }
}

TEST_CASE("superadditivity for level-separated supports") {
  Rng rng(37);
  for (int iter = 0; iter < 100; ++iter) {
    TreeVector shallow = random_vector(rng, 2, 4, 9);
    TreeVector deep;
    for (long s = 0; s < 4; ++s) {
      Node node = N("000");  // depth >= 3 > every shallow support length
      for (int b = 0; b < 2; ++b) node = node.child(static_cast<int>(rng.below(2)));
      long num = rng.range(-9, 9);
      if (num == 0) num = 1;
      deep.set(node, Rational(num, rng.range(1, 9)));
    }
    if (shallow.empty() || deep.empty()) continue;
    for (Flavor flavor : {Flavor::X, Flavor::Y})
      CHECK(norm_sq(shallow + deep, flavor) >=
            norm_sq(shallow, flavor) + norm_sq(deep, flavor));
  }
}

TEST_CASE("homogeneity and sign invariance") {
  Rng rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const TreeVector x = random_vector(rng, 4, 5, 9);
    const Rational c(rng.range(-12, 12), rng.range(1, 7));
    for (Flavor flavor : {Flavor::X, Flavor::Y}) {
      CHECK(norm_sq(c * x, flavor) == c * c * norm_sq(x, flavor));
      // flip the sign of every second coefficient
      TreeVector flipped;
      bool flip = false;
      for (const auto& [node, value] : x) {
        flipped.set(node, flip ? -value : value);
        flip = !flip;
      }
      CHECK(norm_sq(flipped, flavor) == norm_sq(x, flavor));
    }
  }
}

TEST_CASE("triangle inequality, exact comparison of squares") {
  // sqrt(a) <= sqrt(b) + sqrt(c)  iff  a <= b + c or (a-b-c)^2 <= 4bc.
  Rng rng(43);
  for (int iter = 0; iter < 100; ++iter) {
    const TreeVector x = random_vector(rng, 4, 4, 9);
    const TreeVector y = random_vector(rng, 4, 4, 9);
    for (Flavor flavor : {Flavor::X, Flavor::Y}) {
      const Rational a = norm_sq(x + y, flavor);
      const Rational b = norm_sq(x, flavor);
      const Rational c = norm_sq(y, flavor);
      const Rational excess = a - b - c;
      const bool holds = excess <= 0 || excess * excess <= 4 * b * c;
      CHECK(holds);
    }
  }
}

TEST_CASE("monotone in coefficient magnitudes") {
  Rng rng(47);
  for (int iter = 0; iter < 100; ++iter) {
    const TreeVector x = random_vector(rng, 4, 5, 9);
    TreeVector bigger = x;
    for (const auto& [node, value] : x)
      if (rng.below(2) == 0) bigger.set(node, value * rng.range(2, 4));
    for (Flavor flavor : {Flavor::X, Flavor::Y})
      CHECK(norm_sq(bigger, flavor) >= norm_sq(x, flavor));
  }
}

TEST_CASE("admissible indicator families have norm exactly k") {
  // Any k nodes forming an admissible set (a common witness level) give an
  // indicator of X norm exactly k; level antichains are the basic case.
  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<Node> level;
    for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
      Node node = Node::root();
      for (std::size_t b = 0; b < n; ++b)
        node = node.child(static_cast<int>((i >> (n - 1 - b)) & 1));
      level.push_back(node);
    }
    const TreeVector chi = TreeVector::indicator(level);
    const Rational k(std::size_t{1} << n);
    CHECK(norm_sq(chi, Flavor::X) == k * k);
    CHECK(norm_sq(chi, Flavor::Y) == k * k);
  }
  // A mixed-length admissible set (witness level 1).
  const TreeVector mixed = indicator({"0", "10"});
  CHECK(admissible_witness(nodes_from({"0", "10"})).has_value());
  CHECK(norm_sq(mixed, Flavor::X) == 4);
}
