#pragma once

#include <utility>
#include <vector>

#include "treenorm/sets.hpp"
#include "treenorm/vector.hpp"

namespace treenorm {

// Per-block absolute coefficient sums of a vector along a chain. The vector
// need not be the one that produced the chain.
struct BlockProfile {
  std::vector<Rational> sums;
};

// A chain attaining the squared norm, auditable by re-evaluation.
struct NormCertificate {
  Flavor flavor = Flavor::X;
  Chain chain;
  std::vector<Rational> block_sums;
  Rational value_sq = 0;
};

// A flavor-valid subset of support nodes within a length window, maximizing
// the absolute coefficient sum.
struct WindowSubset {
  std::vector<Node> nodes;  // sorted; may be empty (weight 0)
  Rational weight = 0;
  std::size_t witness_level = 0;
};

// block_sums[i] = sum of |x(phi)| over block i; value_sq = sum of squares.
std::pair<std::vector<Rational>, Rational> evaluate_chain(const TreeVector& x,
                                                          const Chain& chain);

BlockProfile block_profile(const TreeVector& x, const Chain& chain);

// Best flavor-valid subset of supp(x) with node lengths in [level_lo,
// level_hi]. Searches every witness level n <= level_hi: eligible nodes are
// grouped by their level-n prefix and the best node per group is kept (a
// valid set holds at most one node per level-n subtree, resp. spine). Ties
// break toward the smaller witness, then the smaller node.
WindowSubset best_window_subset(const TreeVector& x, std::size_t level_lo,
                                std::size_t level_hi, Flavor flavor);

// Exact squared norm. Blocks of an optimal chain occupy disjoint increasing
// length intervals, so the sup decomposes over partitions of the support
// levels into consecutive windows:
//   f(j) = max over i <= j of f(i-1) + best(L_i..L_j)^2.
// Only support nodes matter; off-support nodes add nothing to block sums.
Rational norm_sq(const TreeVector& x, Flavor flavor);

// sqrt(norm_sq) to `digits` significant digits.
std::string norm_decimal(const TreeVector& x, Flavor flavor, unsigned digits = 50);

// An optimal chain with its block sums; x must be nonzero. Among optimal
// chains, prefers fewer blocks, then the reconstruction with the earliest
// window starts (deterministic for golden tests).
NormCertificate best_chain_certificate(const TreeVector& x, Flavor flavor);

// Independent oracle: exhaustive recursion over all chains of flavor-valid
// support subsets, using the definitional all-n witness search. Refuses
// supports larger than `support_bound`.
Rational brute_force_norm_sq(const TreeVector& x, Flavor flavor,
                             std::size_t support_bound = 10);

}  // namespace treenorm
