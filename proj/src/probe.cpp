#include "treenorm/probe.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

#include "treenorm/conditions.hpp"
#include "treenorm/rng.hpp"
#include "treenorm/witness.hpp"

namespace treenorm {

std::string to_string(ProbeMode mode) {
  return mode == ProbeMode::TwoBeta ? "two_beta" : "two_nuc";
}

namespace {

void check_unit_ball(const TreeVector& v, Flavor flavor, const std::string& who) {
  Rational sq = norm_sq(v, flavor);
  if (sq > 1)
    throw std::domain_error(who + " lies outside the " + to_string(flavor) +
                            " unit ball (squared norm " + to_string(sq) + ")");
}

Rational min_pairwise_distance_sq(std::span<const TreeVector> family, Flavor flavor) {
  Rational min_sq = 0;
  bool first = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      Rational d = norm_sq(family[i] - family[j], flavor);
      if (first || d < min_sq) {
        first = false;
        min_sq = std::move(d);
      }
    }
  return min_sq;
}

void render_decimals(ProbeReport& report, unsigned digits) {
  report.epsilon_actual = sqrt_decimal(report.epsilon_sq, digits);
  report.best_value = sqrt_decimal(report.best_sq, digits);
  const Float50 one_minus = 1 - Float50(report.best_value);
  report.delta_empirical =
      one_minus.str(digits > 50 ? 50 : static_cast<int>(digits), std::ios_base::fixed);
}

ProbeReport pair_search(const TreeVector* center, std::span<const TreeVector> family,
                        Flavor flavor, const std::string& family_id, unsigned digits) {
  if (family.size() < 2)
    throw std::invalid_argument("probe family needs at least two members");
  if (center) check_unit_ball(*center, flavor, "center");
  for (std::size_t i = 0; i < family.size(); ++i)
    check_unit_ball(family[i], flavor, "family[" + std::to_string(i) + "]");

  ProbeReport report;
  report.flavor = flavor;
  report.mode = center ? ProbeMode::TwoBeta : ProbeMode::TwoNuc;
  report.family_id = family_id;
  report.family_size = family.size();
  report.epsilon_sq = min_pairwise_distance_sq(family, flavor);

  const Rational denom = center ? 9 : 4;
  bool first = true;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      TreeVector combo = family[i] + family[j];
      if (center) combo += *center;
      Rational value_sq = norm_sq(combo, flavor) / denom;
      if (first || value_sq < report.best_sq) {
        first = false;
        report.best_sq = std::move(value_sq);
        report.best_i = i;
        report.best_j = j;
      }
    }
  render_decimals(report, digits);
  return report;
}

}  // namespace

ProbeReport probe_two_beta(const TreeVector& center, std::span<const TreeVector> family,
                           Flavor flavor, const std::string& family_id,
                           unsigned digits) {
  return pair_search(&center, family, flavor, family_id, digits);
}

ProbeReport probe_two_nuc(std::span<const TreeVector> family, Flavor flavor,
                          const std::string& family_id, unsigned digits) {
  return pair_search(nullptr, family, flavor, family_id, digits);
}

// ---- sweep harness ----

namespace {

using nlohmann::json;

std::uint64_t get_u64(const json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
  return j.at(key).get<std::uint64_t>();
}

long param_long(const FamilySpec& spec, const std::string& key) {
  for (const auto& [k, v] : spec.params)
    if (k == key) return std::stol(v);
  throw std::invalid_argument("family '" + spec.id + "': missing parameter '" + key + "'");
}

Rational param_rational(const FamilySpec& spec, const std::string& key) {
  for (const auto& [k, v] : spec.params)
    if (k == key) return parse_rational_or_decimal(v);
  throw std::invalid_argument("family '" + spec.id + "': missing parameter '" + key + "'");
}

void check_params(const FamilySpec& spec, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : spec.params) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok)
      throw std::invalid_argument("family '" + spec.id + "': unknown parameter '" + k + "'");
  }
}

Rational pow_int(const Rational& base, std::size_t n) {
  Rational r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace

std::vector<TreeVector> generate_family(const FamilySpec& spec, std::uint64_t seed) {
  std::vector<TreeVector> members;
  if (spec.generator == "antichain_columns") {
    check_params(spec, {"n", "depths"});
    const std::size_t n = static_cast<std::size_t>(param_long(spec, "n"));
    const long depths = param_long(spec, "depths");
    if (depths < 2) throw std::invalid_argument("antichain_columns needs depths >= 2");
    const Rational scale = Rational(1) / pow_int(Rational(2), n);
    const std::vector<Node> base = level_antichain(n);
    for (long r = 0; r < depths; ++r) {
      TreeVector v;
      for (const Node& w : base)
        v.set(w.extend(0, static_cast<std::size_t>(r)), scale);
      members.push_back(std::move(v));
    }
  } else if (spec.generator == "singletons") {
    check_params(spec, {"count"});
    const long count = param_long(spec, "count");
    if (count < 2) throw std::invalid_argument("singletons needs count >= 2");
    for (long r = 0; r < count; ++r) {
      TreeVector v;
      v.set(Node::root().extend(0, static_cast<std::size_t>(r)), 1);
      members.push_back(std::move(v));
    }
  } else if (spec.generator == "separated") {
    check_params(spec, {"n", "rounds", "delta"});
    const auto family = make_separated_family(
        static_cast<std::size_t>(param_long(spec, "n")),
        static_cast<std::size_t>(param_long(spec, "rounds")),
        param_rational(spec, "delta"));
    const Rational scale =
        Rational(1) / pow_int(Rational(2), family.depth);
    for (const TreeVector& unit : family.unit_vectors)
      members.push_back(scale * unit);
  } else if (spec.generator == "y_chain") {
    check_params(spec, {"m", "n", "p", "count"});
    const auto family = make_acceptable_chain_family(
        static_cast<std::size_t>(param_long(spec, "m")),
        static_cast<std::size_t>(param_long(spec, "n")),
        static_cast<std::size_t>(param_long(spec, "p")),
        static_cast<std::size_t>(param_long(spec, "count")));
    const Rational scale = Rational(1) / pow_int(Rational(2), family.m);
    for (const auto& cj : family.c_sets)
      members.push_back(scale * TreeVector::indicator(cj));
  } else if (spec.generator == "random") {
    check_params(spec, {"members", "support", "max_len", "coeff_bound"});
    const long count = param_long(spec, "members");
    const long support = param_long(spec, "support");
    const long max_len = param_long(spec, "max_len");
    const long bound = param_long(spec, "coeff_bound");
    if (count < 2 || support < 1 || max_len < 0 || bound < 1)
      throw std::invalid_argument("random family parameters out of range");
    Rng rng(seed);
    for (long r = 0; r < count; ++r) {
      TreeVector v;
      for (long s = 0; s < support; ++s) {
        const long len = rng.range(0, max_len);
        Node node = Node::root();
        for (long b = 0; b < len; ++b) node = node.child(static_cast<int>(rng.below(2)));
        long num = rng.range(-bound, bound);
        if (num == 0) num = 1;
        v.set(node, Rational(num, rng.range(1, bound)));
      }
      const Rational l1 = v.l1();
      if (l1 > 1) v *= Rational(1) / l1;  // l1 dominates both norms
      members.push_back(std::move(v));
    }
  } else {
    throw std::invalid_argument("unknown generator '" + spec.generator + "'");
  }
  return members;
}

SweepSpec parse_sweep_spec(const std::string& json_text) {
  json root = json::parse(json_text);
  if (!root.is_object()) throw std::invalid_argument("sweep spec must be a JSON object");
  for (const auto& [key, value] : root.items())
    if (key != "seed" && key != "flavor" && key != "mode" && key != "center" &&
        key != "families")
      throw std::invalid_argument("unknown key '" + key + "' in sweep spec");

  SweepSpec spec;
  spec.seed = get_u64(root, "seed");
  spec.flavor = parse_flavor(root.at("flavor").get<std::string>());
  const std::string mode = root.value("mode", "two_beta");
  if (mode == "two_beta")
    spec.mode = ProbeMode::TwoBeta;
  else if (mode == "two_nuc")
    spec.mode = ProbeMode::TwoNuc;
  else
    throw std::invalid_argument("mode must be two_beta or two_nuc");
  spec.center = root.value("center", "zero");
  if (spec.center != "zero" && spec.center != "root" && spec.center != "first_member")
    throw std::invalid_argument("center must be zero, root or first_member");

  if (!root.contains("families") || !root.at("families").is_array())
    throw std::invalid_argument("sweep spec needs a 'families' array");
  for (const json& item : root.at("families")) {
    FamilySpec family;
    if (!item.contains("id") || !item.contains("generator"))
      throw std::invalid_argument("each family needs 'id' and 'generator'");
    for (const auto& [key, value] : item.items()) {
      if (key == "id")
        family.id = value.get<std::string>();
      else if (key == "generator")
        family.generator = value.get<std::string>();
      else if (value.is_string())
        family.params.emplace_back(key, value.get<std::string>());
      else
        family.params.emplace_back(key, value.dump());
    }
    std::sort(family.params.begin(), family.params.end());
    spec.families.push_back(std::move(family));
  }
  return spec;
}

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result;
  result.csv = "family_id,epsilon_actual,best_value,delta_empirical,index_i,index_j\n";
  constexpr unsigned kCsvDigits = 12;
  for (std::size_t row = 0; row < spec.families.size(); ++row) {
    const FamilySpec& family_spec = spec.families[row];
    try {
      const auto members = generate_family(family_spec, spec.seed + row);
      ProbeReport report;
      if (spec.mode == ProbeMode::TwoBeta) {
        TreeVector center;
        if (spec.center == "root") center.set(Node::root(), 1);
        if (spec.center == "first_member") center = members.at(0);
        report = probe_two_beta(center, members, spec.flavor, family_spec.id, kCsvDigits);
      } else {
        report = probe_two_nuc(members, spec.flavor, family_spec.id, kCsvDigits);
      }
      result.csv += report.family_id + "," + report.epsilon_actual + "," +
                    report.best_value + "," + report.delta_empirical + "," +
                    std::to_string(report.best_i) + "," +
                    std::to_string(report.best_j) + "\n";
      result.reports.push_back(std::move(report));
    } catch (const std::exception& e) {
      result.csv += family_spec.id + ",,,,,\n";
      result.row_errors.push_back(family_spec.id + ": " + e.what());
    }
  }
  return result;
}

}  // namespace treenorm
