#include "treenorm/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace treenorm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// cpp_int's string constructor treats a leading 0 as an octal prefix.
BigInt digits_to_int(std::string_view s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return BigInt(std::string(s.substr(i)));
}

BigInt pow10(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!all_digits(body)) bad();
    num = digits_to_int(body);
  } else {
    auto ns = body.substr(0, slash);
    auto ds = body.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) bad();
    num = digits_to_int(ns);
    den = digits_to_int(ds);
    if (den == 0) bad();
  }
  Rational q(num, den);
  return neg ? Rational(-q) : q;
}

Rational decimal_to_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { throw std::invalid_argument("not a decimal: '" + s + "'"); };
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  // optional exponent part
  long exp10 = 0;
  auto epos = body.find_first_of("eE");
  if (epos != std::string_view::npos) {
    auto es = body.substr(epos + 1);
    std::string ess(es);
    if (ess.empty()) bad();
    size_t used = 0;
    exp10 = std::stol(ess, &used);
    if (used != ess.size()) bad();
    body = body.substr(0, epos);
  }
  auto dot = body.find('.');
  std::string digits;
  unsigned frac = 0;
  if (dot == std::string_view::npos) {
    if (!all_digits(body)) bad();
    digits = std::string(body);
  } else {
    auto ip = body.substr(0, dot);
    auto fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) bad();
    if (!ip.empty() && !all_digits(ip)) bad();
    if (!fp.empty() && !all_digits(fp)) bad();
    digits = std::string(ip) + std::string(fp);
    frac = static_cast<unsigned>(fp.size());
  }
  if (digits.empty()) bad();
  Rational q(digits_to_int(digits), pow10(frac));
  if (exp10 > 0)
    q *= Rational(pow10(static_cast<unsigned>(exp10)));
  else if (exp10 < 0)
    q /= Rational(pow10(static_cast<unsigned>(-exp10)));
  return neg ? Rational(-q) : q;
}

Rational parse_rational_or_decimal(std::string_view text) {
  if (text.find('.') != std::string_view::npos ||
      text.find('e') != std::string_view::npos ||
      text.find('E') != std::string_view::npos)
    return decimal_to_rational(text);
  return parse_rational(text);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  BigInt p = numerator(q), d = denominator(q);
  BigInt sp = isqrt(p), sd = isqrt(d);
  if (sp * sp != p || sd * sd != d) return std::nullopt;
  return Rational(sp, sd);
}

std::string sqrt_decimal(const Rational& q, unsigned digits) {
  if (q < 0) throw std::domain_error("sqrt of negative value");
  if (digits == 0) throw std::invalid_argument("digits must be positive");
  if (q == 0) return "0";
  const BigInt p = numerator(q), d = denominator(q);

  // Magnitude E with 10^(E-1) <= sqrt(q) < 10^E, i.e. 10^(2E-2) <= q < 10^(2E),
  // found by exact rational comparison against powers of ten.
  auto pow10_rat = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                  : Rational(1, pow10(static_cast<unsigned>(-k)));
  };
  long E = 0;
  while (q >= pow10_rat(2 * E)) ++E;
  while (q < pow10_rat(2 * E - 2)) --E;
  // digitsInt = floor(sqrt(q) * 10^(digits - E)), exact:
  // sqrt(p/d) * 10^m = sqrt(p * d * 10^(2m)) / d, and floor(isqrt(X)/d)
  // equals floor(sqrt(X)/d).
  const long m = static_cast<long>(digits) - E;
  BigInt scaled;
  if (m >= 0) {
    scaled = isqrt(p * d * pow10(static_cast<unsigned>(2 * m))) / d;
  } else {
    scaled = isqrt(p * d) / (d * pow10(static_cast<unsigned>(-m)));
  }
  std::string ds = scaled.str();
  // scaled has exactly `digits` digits unless sqrt(q) is just below a power
  // of ten boundary; pad defensively.
  while (ds.size() < digits) ds.insert(ds.begin(), '0');

  std::string out;
  if (E > 0) {
    if (static_cast<size_t>(E) >= ds.size()) {
      out = ds + std::string(static_cast<size_t>(E) - ds.size(), '0');
    } else {
      out = ds.substr(0, static_cast<size_t>(E)) + "." + ds.substr(static_cast<size_t>(E));
    }
  } else {
    out = "0." + std::string(static_cast<size_t>(-E), '0') + ds;
  }
  return out;
}

}  // namespace treenorm
