#include "treenorm/conditions.hpp"

#include <stdexcept>

namespace treenorm {

Rational l2_sq(std::span<const Rational> v) {
  Rational s = 0;
  for (const Rational& x : v) s += x * x;
  return s;
}

Rational parallelogram_gap(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size())
    throw std::invalid_argument("vectors must have equal length");
  Rational sum_sq = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rational s = u[i] + v[i];
    sum_sq += s * s;
  }
  return 2 * l2_sq(u) + 2 * l2_sq(v) - sum_sq;
}

LemmaResult l2_lemma_check(std::span<const Rational> a, std::span<const Rational> b,
                           std::span<const Rational> c, const Rational& delta) {
  if (a.size() != b.size() || b.size() != c.size())
    throw std::invalid_argument("vectors must have equal length");
  if (delta < 0) throw std::domain_error("delta must be nonnegative");
  const std::span<const Rational> vecs[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    if (l2_sq(vecs[i]) > 1)
      throw std::domain_error("vector " + std::to_string(i) +
                              " lies outside the l2 unit ball");

  LemmaResult result;
  result.bound_sq = 18 * delta;

  // Hypothesis: ||a+b+c||/3 >= 1-delta, compared through squares.
  Rational sum_sq = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational s = a[i] + b[i] + c[i];
    sum_sq += s * s;
  }
  const Rational one_minus = 1 - delta;
  const bool hypothesis = one_minus <= 0 || sum_sq >= 9 * one_minus * one_minus;
  if (!hypothesis) {
    result.status = LemmaStatus::HypothesisFailed;
    return result;
  }

  result.status = LemmaStatus::ConclusionHolds;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Rational dist_sq = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        Rational d = vecs[i][k] - vecs[j][k];
        dist_sq += d * d;
      }
      if (dist_sq > result.max_dist_sq) {
        result.max_dist_sq = dist_sq;
        result.pair_first = i;
        result.pair_second = j;
      }
    }
  if (result.max_dist_sq > result.bound_sq)
    result.status = LemmaStatus::Counterexample;
  return result;
}

template <typename F>
bool check_two_beta_delta_t(const F& epsilon, const F& delta) {
  if (!(epsilon > 0 && epsilon <= 2))
    throw std::domain_error("epsilon must lie in (0, 2]");
  if (!(delta > 0 && 24 * delta < 1))
    throw std::domain_error("delta must lie in (0, 1/24)");
  using boost::multiprecision::sqrt;
  const F bracket = sqrt(F(1) - 24 * delta) - sqrt(F(1) - epsilon * epsilon / 9);
  const F one_minus = F(1) - 3 * delta;
  const F lhs = one_minus * one_minus + bracket * bracket;
  return lhs - 1 > guard_band<F>();
}

template bool check_two_beta_delta_t<Float50>(const Float50&, const Float50&);
template bool check_two_beta_delta_t<Float100>(const Float100&, const Float100&);

bool check_two_beta_delta(const Float50& epsilon, const Float50& delta) {
  return check_two_beta_delta_t(epsilon, delta);
}

TwoBetaParams make_two_beta_params(const Float50& epsilon, const Float50& delta) {
  if (!check_two_beta_delta(epsilon, delta))
    throw std::domain_error("delta " + delta.str(12) +
                            " does not satisfy the two-beta condition at epsilon " +
                            epsilon.str(12));
  return TwoBetaParams{epsilon, delta};
}

std::optional<Float50> max_two_beta_delta(const Float50& epsilon, const Float50& tol) {
  if (!(epsilon > 0 && epsilon <= 2))
    throw std::domain_error("epsilon must lie in (0, 2]");
  if (!(tol > 0)) throw std::domain_error("tol must be positive");

  // Bracket-nonnegative zone; at its right end the condition is false.
  const Float50 cap = epsilon * epsilon / 216;
  if (cap <= tol) return std::nullopt;

  constexpr int kGrid = 64;
  Float50 lo = 0, hi = cap;
  bool monotone = true, seen_false = false;
  for (int k = 1; k <= kGrid; ++k) {
    const Float50 d = cap * k / kGrid;
    const bool ok = check_two_beta_delta(epsilon, d);
    if (ok && seen_false) monotone = false;
    if (!ok && !seen_false) {
      seen_false = true;
      hi = d;
    }
    if (ok && !seen_false) lo = d;
  }
  if (!seen_false) hi = cap;  // cannot happen: the cap itself fails
  if (!monotone) return lo > 0 ? std::optional<Float50>(lo) : std::nullopt;

  while (hi - lo > tol) {
    const Float50 mid = (lo + hi) / 2;
    if (check_two_beta_delta(epsilon, mid))
      lo = mid;
    else
      hi = mid;
  }
  if (lo == 0) return std::nullopt;
  return lo;
}

std::vector<DeltaSweepRow> delta_star_sweep(std::span<const Float50> epsilons,
                                            const Float50& tol) {
  std::vector<DeltaSweepRow> rows;
  rows.reserve(epsilons.size());
  for (const Float50& e : epsilons) rows.push_back({e, max_two_beta_delta(e, tol)});
  return rows;
}

template <typename F>
TwoNucCheckT<F> check_two_nuc_conditions_t(const F& epsilon, const F& delta,
                                           const F& eta_minus, const F& eta_plus) {
  using boost::multiprecision::sqrt;
  if (!(epsilon > 0 && epsilon <= 2))
    throw std::domain_error("epsilon must lie in (0, 2]");
  if (!(delta > 0 && delta < 1))
    throw std::domain_error("delta must lie in (0, 1)");
  if (!(eta_plus > eta_minus))
    throw std::domain_error("eta_plus must exceed eta_minus");
  if (!(eta_minus > epsilon / 3))
    throw std::domain_error("eta_minus must exceed epsilon/3");

  TwoNucCheckT<F> check;
  check.params.epsilon = epsilon;
  check.params.delta = delta;
  check.params.eta_minus = eta_minus;
  check.params.eta_plus = eta_plus;

  const F guard = guard_band<F>();
  const F delta_prime = 12 * delta + 2 * sqrt(8 * delta);
  check.params.delta_prime = delta_prime;
  if (!(epsilon * epsilon / 18 - delta_prime > guard)) {
    check.violated = "Y1";
    return check;
  }
  const F y2_lhs = F(1) - 2 * delta - (2 + sqrt(F(8))) * sqrt(delta);
  const F y2_rhs = sqrt(F(1) - (epsilon / 3) * (epsilon / 3));
  if (!(y2_lhs - y2_rhs > guard)) {
    check.violated = "Y2";
    return check;
  }
  const F theta_sq = eta_minus * eta_minus - delta_prime;
  if (!(theta_sq > guard)) {
    check.violated = "theta_undefined";
    return check;
  }
  const F theta = sqrt(theta_sq);
  check.params.theta = theta;
  const F y3_rhs =
      3 * eta_plus + sqrt(eta_plus * eta_plus - eta_minus * eta_minus + delta_prime);
  if (!(4 * theta - y3_rhs > guard)) {
    check.violated = "Y3";
    return check;
  }
  check.ok = true;
  return check;
}

template TwoNucCheckT<Float50> check_two_nuc_conditions_t<Float50>(
    const Float50&, const Float50&, const Float50&, const Float50&);
template TwoNucCheckT<Float100> check_two_nuc_conditions_t<Float100>(
    const Float100&, const Float100&, const Float100&, const Float100&);

TwoNucCheck check_two_nuc_conditions(const Float50& epsilon, const Float50& delta,
                                     const Float50& eta_minus, const Float50& eta_plus) {
  return check_two_nuc_conditions_t(epsilon, delta, eta_minus, eta_plus);
}

Float50 parse_float50(std::string_view text) {
  try {
    return Float50(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
}

}  // namespace treenorm
