#pragma once

// Exact rationals for the approximation parameter and gap thresholds.
// Kernel sizes are ceilings of rational expressions; doing this in floating
// point would let rounding drift move the size gate by one, so we keep
// everything in integers.

#include <cstdint>
#include <numeric>
#include <string>

#include "domkern/errors.hpp"

namespace domkern {

struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool positive() const { return num > 0; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// ceil(r * k) for nonnegative k, exact.
inline long long ceil_mul(const Rational& r, long long k) {
  __int128 n = static_cast<__int128>(r.num) * k;
  __int128 d = r.den;
  if (n <= 0) return static_cast<long long>(n / d);  // callers only pass n >= 0
  return static_cast<long long>((n + d - 1) / d);
}

// Accepts "3", "0.25", "1.5", "3/4". Anything else is invalid input.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw invalid_input("empty rational");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::size_t p1 = 0, p2 = 0;
    long long n = 0, d = 0;
    try {
      n = std::stoll(text.substr(0, slash), &p1);
      d = std::stoll(text.substr(slash + 1), &p2);
    } catch (const std::exception&) {
      throw invalid_input("bad rational: " + text);
    }
    if (p1 != slash || p2 != text.size() - slash - 1)
      throw invalid_input("bad rational: " + text);
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    std::size_t p = 0;
    long long n = 0;
    try {
      n = std::stoll(text, &p);
    } catch (const std::exception&) {
      throw invalid_input("bad rational: " + text);
    }
    if (p != text.size()) throw invalid_input("bad rational: " + text);
    return Rational(n, 1);
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_len = text.size() - dot - 1;
  if (frac_len == 0 || digits.empty()) throw invalid_input("bad rational: " + text);
  std::size_t p = 0;
  long long n = 0;
  try {
    n = std::stoll(digits, &p);
  } catch (const std::exception&) {
    throw invalid_input("bad rational: " + text);
  }
  if (p != digits.size()) throw invalid_input("bad rational: " + text);
  long long d = 1;
  for (std::size_t i = 0; i < frac_len; ++i) {
    if (d > 1000000000000000000LL / 10) throw invalid_input("rational too precise: " + text);
    d *= 10;
  }
  return Rational(n, d);
}

inline std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace domkern
