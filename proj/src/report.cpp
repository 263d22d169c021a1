#include "treenorm/report.hpp"

#include <chrono>
#include <ctime>

namespace treenorm {

std::string current_timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json make_run_report(const std::string& command, Json config, Json results,
                     unsigned sqrt_digits, double wall_time_ms) {
  Json report;
  report["command"] = command;
  report["config"] = std::move(config);
  report["results"] = std::move(results);
  report["engine_version"] = kEngineVersion;
  report["exact"] = Json{{"rational_arithmetic", true}, {"sqrt_digits", sqrt_digits}};
  // the only non-reproducible values, grouped so golden tests mask one key
  report["timing"] =
      Json{{"wall_ms", wall_time_ms}, {"timestamp", current_timestamp_utc()}};
  return report;
}

std::string render_sqrt(const Rational& value_sq, unsigned digits) {
  if (auto exact = exact_sqrt(value_sq)) return to_string(*exact);
  return sqrt_decimal(value_sq, digits);
}

Json norm_value_json(const Rational& value_sq, unsigned digits) {
  return Json{{"sq", to_string(value_sq)}, {"value", render_sqrt(value_sq, digits)}};
}

}  // namespace treenorm
