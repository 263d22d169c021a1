#pragma once

#include <span>
#include <string>
#include <vector>

#include "treenorm/norm.hpp"
#include "treenorm/vector.hpp"

namespace treenorm {

enum class ProbeMode { TwoBeta, TwoNuc };

std::string to_string(ProbeMode mode);

// Result of an exhaustive pair search over a unit-ball family. All values
// are kept as exact squared rationals; the decimal fields are renderings.
// best_sq is already normalized: ||x + x_i + x_j||^2 / 9 for two-beta,
// ||x_i + x_j||^2 / 4 for two-NUC, so best_value = sqrt(best_sq).
struct ProbeReport {
  Flavor flavor = Flavor::X;
  ProbeMode mode = ProbeMode::TwoBeta;
  std::string family_id;
  std::size_t family_size = 0;
  Rational epsilon_sq = 0;  // min pairwise squared distance
  Rational best_sq = 0;
  std::size_t best_i = 0, best_j = 0;
  std::string epsilon_actual;   // sqrt(epsilon_sq)
  std::string best_value;       // sqrt(best_sq)
  std::string delta_empirical;  // 1 - best_value
};

// Exhaustive search over pairs i < j minimizing ||x + x_i + x_j||/3. The
// center and every member must satisfy norm_sq <= 1 exactly; the error
// names the first offender. Ties break toward the lexicographically
// smallest index pair.
ProbeReport probe_two_beta(const TreeVector& center, std::span<const TreeVector> family,
                           Flavor flavor, const std::string& family_id = "",
                           unsigned digits = 50);

// Same search minimizing ||x_i + x_j||/2, with no center.
ProbeReport probe_two_nuc(std::span<const TreeVector> family, Flavor flavor,
                          const std::string& family_id = "", unsigned digits = 50);

// ---- sweep harness ----

// One row of a sweep: a generator name with its parameters. Supported
// generators (all unit-ball by construction):
//   antichain_columns  n, depths      members 2^-n * chi{w+0^r : |w|=n}
//   singletons         count          chi at the all-zero node of length r
//   separated          n, rounds, delta   round indicators scaled by 2^-n
//   y_chain            m, n, p, count     chain sets scaled by 2^-m
//   random             members, support, max_len, coeff_bound   l1-normalized
struct FamilySpec {
  std::string id;
  std::string generator;
  std::vector<std::pair<std::string, std::string>> params;  // as given
};

struct SweepSpec {
  std::uint64_t seed = 0;
  Flavor flavor = Flavor::X;
  ProbeMode mode = ProbeMode::TwoBeta;
  std::string center = "zero";  // zero | root | first_member
  std::vector<FamilySpec> families;
};

// Parses the JSON sweep description; unknown keys are rejected.
SweepSpec parse_sweep_spec(const std::string& json_text);

struct SweepResult {
  std::string csv;  // header + one row per family, failed rows with empty fields
  std::vector<ProbeReport> reports;
  std::vector<std::string> row_errors;  // "<family_id>: <message>"
};

// Deterministic under a fixed spec: identical seeds give byte-identical CSV.
SweepResult run_sweep(const SweepSpec& spec);

// Instantiates one family row (exposed for tests and the acceptance suite).
std::vector<TreeVector> generate_family(const FamilySpec& spec, std::uint64_t seed);

}  // namespace treenorm
