#pragma once
#include <complex>
#include <cstdint>
#include <string>

#include "mdv/error.hpp"

namespace mdv {

// Exact p/q, canonical form: q > 0, gcd(|p|, q) = 1, zero is 0/1.
// All arithmetic is overflow-checked (throws Errc::Overflow).
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d);

  // Accepts "p" or "p/q" with optional leading '-' on either part; no spaces.
  static Rational parse(const std::string& text);
  std::string str() const;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool is_integer() const { return den == 1; }

  // Fractional part in [0, 1).
  Rational mod1() const;

  Rational operator-() const { return {-num, den}; }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

// e^{2*pi*i*turns}; the angle is reduced mod 1 exactly first, and quarter turns
// are returned exactly (1, i, -1, -i).
std::complex<double> unit_phase(const Rational& turns);

}  // namespace mdv
