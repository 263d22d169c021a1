#include "treenorm/norm.hpp"

#include <algorithm>
#include <map>

namespace treenorm {

std::pair<std::vector<Rational>, Rational> evaluate_chain(const TreeVector& x,
                                                          const Chain& chain) {
  std::vector<Rational> sums;
  sums.reserve(chain.blocks.size());
  Rational value_sq = 0;
  for (const NodeSet& block : chain.blocks) {
    Rational s = 0;
    for (const Node& node : block.nodes) s += abs(x.at(node));
    value_sq += s * s;
    sums.push_back(std::move(s));
  }
  return {std::move(sums), std::move(value_sq)};
}

BlockProfile block_profile(const TreeVector& x, const Chain& chain) {
  return BlockProfile{evaluate_chain(x, chain).first};
}

WindowSubset best_window_subset(const TreeVector& x, std::size_t level_lo,
                                std::size_t level_hi, Flavor flavor) {
  if (level_lo > level_hi)
    throw std::invalid_argument("window bounds out of order");
  std::vector<const Node*> window;
  for (const auto& [node, coeff] : x)
    if (node.length() >= level_lo && node.length() <= level_hi)
      window.push_back(&node);

  WindowSubset best;
  if (window.empty()) return best;
  bool have = false;
  for (std::size_t n = 0; n <= level_hi; ++n) {
    // One node per level-n prefix; for Y the node must also sit on the
    // prefix's spine. Keep the heaviest node per prefix.
    std::map<Node, const Node*> pick;
    for (const Node* node : window) {
      if (node->length() < n) continue;
      Node pre = node->prefix(n);
      if (flavor == Flavor::Y && !on_spine(*node, pre)) continue;
      auto [it, inserted] = pick.try_emplace(pre, node);
      if (!inserted) {
        const Rational cur = abs(x.at(*it->second));
        const Rational cand = abs(x.at(*node));
        if (cand > cur || (cand == cur && *node < *it->second)) it->second = node;
      }
    }
    if (pick.empty()) continue;
    Rational weight = 0;
    for (const auto& [pre, node] : pick) weight += abs(x.at(*node));
    if (!have || weight > best.weight) {
      have = true;
      best.weight = std::move(weight);
      best.witness_level = n;
      best.nodes.clear();
      for (const auto& [pre, node] : pick) best.nodes.push_back(*node);
      std::sort(best.nodes.begin(), best.nodes.end());
    }
  }
  return best;
}

namespace {

std::vector<std::size_t> support_levels(const TreeVector& x) {
  std::vector<std::size_t> levels;
  for (const auto& [node, coeff] : x) levels.push_back(node.length());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

struct WindowDP {
  std::vector<Rational> value;      // value[j] = best over levels 1..j
  std::vector<std::size_t> blocks;  // min block count among optimal
  std::vector<std::size_t> start;   // chosen window start for backtracking
};

WindowDP run_window_dp(const TreeVector& x, const std::vector<std::size_t>& levels,
                       Flavor flavor) {
  const std::size_t p = levels.size();
  // best weight per window [i..j], 1-based over the level sequence
  std::vector<std::vector<Rational>> win(p + 1, std::vector<Rational>(p + 1, 0));
  for (std::size_t i = 1; i <= p; ++i)
    for (std::size_t j = i; j <= p; ++j)
      win[i][j] = best_window_subset(x, levels[i - 1], levels[j - 1], flavor).weight;

  WindowDP dp;
  dp.value.assign(p + 1, Rational(0));
  dp.blocks.assign(p + 1, 0);
  dp.start.assign(p + 1, 0);
  for (std::size_t j = 1; j <= p; ++j) {
    bool have = false;
    for (std::size_t i = 1; i <= j; ++i) {
      Rational cand = dp.value[i - 1] + win[i][j] * win[i][j];
      std::size_t nblocks = dp.blocks[i - 1] + 1;
      if (!have || cand > dp.value[j] ||
          (cand == dp.value[j] &&
           (nblocks < dp.blocks[j] ||
            (nblocks == dp.blocks[j] && i < dp.start[j])))) {
        have = true;
        dp.value[j] = std::move(cand);
        dp.blocks[j] = nblocks;
        dp.start[j] = i;
      }
    }
  }
  return dp;
}

}  // namespace

Rational norm_sq(const TreeVector& x, Flavor flavor) {
  if (x.empty()) return 0;
  const auto levels = support_levels(x);
  return run_window_dp(x, levels, flavor).value[levels.size()];
}

std::string norm_decimal(const TreeVector& x, Flavor flavor, unsigned digits) {
  return sqrt_decimal(norm_sq(x, flavor), digits);
}

NormCertificate best_chain_certificate(const TreeVector& x, Flavor flavor) {
  if (x.empty())
    throw std::invalid_argument("the zero vector has no nonempty certificate");
  const auto levels = support_levels(x);
  const WindowDP dp = run_window_dp(x, levels, flavor);

  std::vector<std::pair<std::size_t, std::size_t>> windows;  // [i..j], 1-based
  for (std::size_t j = levels.size(); j > 0;) {
    std::size_t i = dp.start[j];
    windows.emplace_back(i, j);
    j = i - 1;
  }
  std::reverse(windows.begin(), windows.end());

  NormCertificate cert;
  cert.flavor = flavor;
  cert.chain.flavor = flavor;
  std::vector<std::vector<Node>> raw_blocks;
  for (auto [i, j] : windows) {
    WindowSubset sub = best_window_subset(x, levels[i - 1], levels[j - 1], flavor);
    if (sub.nodes.empty()) continue;  // cannot happen: every level has support
    raw_blocks.push_back(std::move(sub.nodes));
  }
  cert.chain = validate_chain(raw_blocks, flavor);
  auto [sums, value_sq] = evaluate_chain(x, cert.chain);
  cert.block_sums = std::move(sums);
  cert.value_sq = std::move(value_sq);
  return cert;
}

Rational brute_force_norm_sq(const TreeVector& x, Flavor flavor,
                             std::size_t support_bound) {
  const std::size_t n = x.support_size();
  if (n > support_bound)
    throw std::invalid_argument(
        "support size " + std::to_string(n) + " exceeds the oracle bound " +
        std::to_string(support_bound));
  if (n == 0) return 0;

  std::vector<Node> support;
  std::vector<Rational> weight;
  for (const auto& [node, coeff] : x) {
    support.push_back(node);
    weight.push_back(abs(coeff));
  }

  // Every flavor-valid nonempty subset of the support, via the definitional
  // all-n witness search (independent of the engine's fast path). Subsets
  // are bucketed by minimum length so the chain recursion only visits
  // feasible extensions.
  struct ValidSubset {
    std::size_t max_len;
    Rational sum_sq;
  };
  const std::size_t top = x.max_support_length();
  std::vector<std::vector<ValidSubset>> by_min_len(top + 1);
  std::vector<Node> scratch;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    scratch.clear();
    Rational sum = 0;
    std::size_t min_len = top, max_len = 0;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) {
        scratch.push_back(support[b]);
        sum += weight[b];
        min_len = std::min(min_len, support[b].length());
        max_len = std::max(max_len, support[b].length());
      }
    if (!witness_levels(scratch, flavor).empty())
      by_min_len[min_len].push_back({max_len, sum * sum});
  }

  // Exhaustive recursion over chains: each step appends a valid subset whose
  // minimum length clears the previous block's maximum (the << constraint).
  Rational best = 0;
  auto recurse = [&](auto&& self, std::size_t floor, const Rational& acc) -> void {
    if (acc > best) best = acc;
    for (std::size_t l = floor; l <= top; ++l)
      for (const ValidSubset& s : by_min_len[l])
        self(self, s.max_len + 1, acc + s.sum_sq);
  };
  recurse(recurse, 0, Rational(0));
  return best;
}

}  // namespace treenorm
