#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "treenorm/rational.hpp"

namespace treenorm {

// Delta-condition checks run in decimal floating point at a compile-time
// precision (50 digits by default, 100 for the doubled-precision
// re-verification the tests perform). Every inequality only passes when the
// margin clears a guard band of 10^(10 - digits), so "true" is never a
// rounding artifact; values inside the band count as failing.
using Float50 = boost::multiprecision::cpp_dec_float_50;
using Float100 = boost::multiprecision::cpp_dec_float_100;

template <typename F>
F guard_band() {
  F g = 1;
  for (int i = 0; i < std::numeric_limits<F>::digits10 - 10; ++i) g /= 10;
  return g;
}

// ---- exact l2 machinery (rational vectors) ----

using VecQ = std::vector<Rational>;

Rational l2_sq(std::span<const Rational> v);

// ||u - v||_2^2 computed through the parallelogram law,
// 2||u||^2 + 2||v||^2 - ||u+v||^2; exact, so tests can pin the identity
// against the direct difference-of-squares evaluation.
Rational parallelogram_gap(std::span<const Rational> u, std::span<const Rational> v);

enum class LemmaStatus { HypothesisFailed, ConclusionHolds, Counterexample };

struct LemmaResult {
  LemmaStatus status = LemmaStatus::HypothesisFailed;
  // Worst pair (0=a, 1=b, 2=c) and its squared distance, when the
  // hypothesis held.
  int pair_first = -1, pair_second = -1;
  Rational max_dist_sq = 0;
  Rational bound_sq = 0;  // 18 * delta
};

// Checks one instance of the averaged-triple lemma: vectors a, b, c in the
// closed l2 unit ball with ||a+b+c||/3 >= 1-delta must be pairwise within
// sqrt(18*delta). All comparisons are exact rational comparisons of squares.
// A Counterexample result would falsify the lemma; the test suite fails the
// build if the randomized search ever produces one.
LemmaResult l2_lemma_check(std::span<const Rational> a, std::span<const Rational> b,
                           std::span<const Rational> c, const Rational& delta);

// ---- two-beta delta condition ----

// (1-3d)^2 + (sqrt(1-24d) - sqrt(1-e^2/9))^2 > 1, for 0 < e <= 2 and
// 0 < d < 1/24. This is the condition a two-beta modulus delta must satisfy
// for separation epsilon.
template <typename F>
bool check_two_beta_delta_t(const F& epsilon, const F& delta);

bool check_two_beta_delta(const Float50& epsilon, const Float50& delta);

// A validated (epsilon, delta) pair: constructing one asserts the condition.
struct TwoBetaParams {
  Float50 epsilon, delta;
};

TwoBetaParams make_two_beta_params(const Float50& epsilon, const Float50& delta);

// Largest delta* (within tol) such that the condition holds on all of
// (0, delta*]. The search is confined to (0, e^2/216], where the inner
// square-root bracket is nonnegative and the expression provably decreases;
// beyond that point the condition can hold again spuriously, with the
// bracket negative, which the underlying argument cannot use. A grid
// pre-scan confirms monotonicity before bisection and degrades to the grid
// answer if the pattern ever disagrees. Returns nullopt when no delta of at
// least tol is admissible.
std::optional<Float50> max_two_beta_delta(const Float50& epsilon, const Float50& tol);

struct DeltaSweepRow {
  Float50 epsilon;
  std::optional<Float50> delta_star;
};

std::vector<DeltaSweepRow> delta_star_sweep(std::span<const Float50> epsilons,
                                            const Float50& tol);

// ---- two-NUC delta conditions ----

template <typename F>
struct TwoNucParamsT {
  F epsilon{}, delta{}, delta_prime{}, eta_minus{}, eta_plus{}, theta{};
};
using TwoNucParams = TwoNucParamsT<Float50>;

template <typename F>
struct TwoNucCheckT {
  bool ok = false;
  std::string violated;  // "Y1" | "Y2" | "theta_undefined" | "Y3"
  TwoNucParamsT<F> params;
};
using TwoNucCheck = TwoNucCheckT<Float50>;

// Computes delta' = 12*delta + 2*sqrt(8*delta) and theta =
// sqrt(eta_minus^2 - delta') and checks, in order:
//   Y1: delta' <= epsilon^2/18
//   Y2: 1 - 2*delta - (2+sqrt(8))*sqrt(delta) > sqrt(1 - (epsilon/3)^2)
//   Y3: 4*theta >= 3*eta_plus + sqrt(eta_plus^2 - eta_minus^2 + delta')
// Returns populated params on success or names the first failing condition.
// Requires 0 < epsilon <= 2, 0 < delta < 1, eta_plus > eta_minus > epsilon/3.
template <typename F>
TwoNucCheckT<F> check_two_nuc_conditions_t(const F& epsilon, const F& delta,
                                           const F& eta_minus, const F& eta_plus);

TwoNucCheck check_two_nuc_conditions(const Float50& epsilon, const Float50& delta,
                                     const Float50& eta_minus, const Float50& eta_plus);

Float50 parse_float50(std::string_view text);

}  // namespace treenorm
