#pragma once

#include <span>
#include <vector>

#include "treenorm/norm.hpp"
#include "treenorm/sets.hpp"
#include "treenorm/tree.hpp"
#include "treenorm/vector.hpp"

namespace treenorm {

// The 2^n nodes of length n, in canonical order. Pairwise incomparable and
// admissible (and acceptable) with witness n, so the indicator has both
// norms exactly 2^n.
std::vector<Node> level_antichain(std::size_t n);

// One round of the separated-branch construction: per slot i a branch pair
// (main through anchor+"1", side the all-zero continuation of the anchor),
// all separated at `level`, with the selected node xi_i sitting on the side
// branch at exactly that level.
struct SeparatedRound {
  std::vector<Branch> main;  // descended into for later rounds
  std::vector<Branch> side;  // carries this round's selected nodes
  std::size_t level = 0;
  std::vector<Node> selected;
};

// Witness family against improving the X norm's convexity: round vectors
// whose pairwise unions stay admissible, so all pairwise X distances are
// exactly 2^(n+1) at scale 1. `scaled_vectors` carry the (2(1-delta))^-n
// coefficient the modulus argument uses; all exact claims are made at
// scale 1 and transfer by homogeneity.
struct SeparatedFamily {
  std::size_t depth = 0;  // 2^depth slots
  Rational delta = 0;
  Rational scale = 1;
  std::vector<SeparatedRound> rounds;
  std::vector<TreeVector> unit_vectors;    // scale 1 indicators
  std::vector<TreeVector> scaled_vectors;  // scale * indicator
};

SeparatedFamily make_separated_family(std::size_t n, std::size_t rounds,
                                      const Rational& delta);

// Revalidates every structural fact of a family through the tree and set
// predicates, independently of how the generator produced it. Throws
// std::logic_error on the first violation.
void verify_separated_family(const SeparatedFamily& family);

// Acceptable chain family: B on the spines of one half of 2^(m+1) chosen
// level-n nodes, and count sets C_1 << C_2 << ... on the spines of the
// other half, one level per C_j, everything at length >= p.
struct AcceptableChainFamily {
  std::size_t m = 0;          // each set has 2^m nodes
  std::size_t level = 0;      // n: the split level
  std::size_t min_level = 0;  // p
  std::vector<Node> phi1, phi2;
  std::vector<Node> b_set;
  std::vector<std::vector<Node>> c_sets;
};

AcceptableChainFamily make_acceptable_chain_family(std::size_t m, std::size_t n,
                                                   std::size_t p, std::size_t count);

void verify_acceptable_chain_family(const AcceptableChainFamily& family);

struct SeparationReport {
  std::size_t pairs_checked = 0;
  std::size_t min_i = 0, min_j = 0;
  Rational min_dist_sq = 0;
  Rational threshold = 0;
  bool pass = false;  // min distance >= threshold, compared through squares
};

// Exact pairwise distances via norm_sq of differences.
SeparationReport verify_separation(std::span<const TreeVector> vectors, Flavor flavor,
                                   const Rational& threshold);

}  // namespace treenorm
