#include "mdv/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>

namespace mdv {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(Errc::Overflow, std::string("rational ") + what);
  }
  return static_cast<std::int64_t>(v);
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rational normalized(i128 n, i128 d, const char* what) {
  if (d == 0) throw Error(Errc::InvalidParameters, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num = narrow(n, what);
  r.den = narrow(d, what);
  if (r.num == 0) r.den = 1;
  return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = normalized(n, d, "construction");
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [&](const std::string& part) -> std::int64_t {
    if (part.empty()) throw Error(Errc::ParseError, "empty integer in '" + text + "'");
    std::size_t i = part[0] == '-' ? 1 : 0;
    if (i == part.size()) throw Error(Errc::ParseError, "bare sign in '" + text + "'");
    i128 v = 0;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw Error(Errc::ParseError, "bad rational '" + text + "'");
      v = v * 10 + (part[i] - '0');
      if (v > std::numeric_limits<std::int64_t>::max())
        throw Error(Errc::ParseError, "rational out of range '" + text + "'");
    }
    return static_cast<std::int64_t>(part[0] == '-' ? -v : v);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return {parse_int(text)};
  if (text.find('/', slash + 1) != std::string::npos)
    throw Error(Errc::ParseError, "bad rational '" + text + "'");
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::mod1() const {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  return {r, den};
}

Rational operator+(const Rational& a, const Rational& b) {
  return normalized(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den, "add");
}

Rational operator-(const Rational& a, const Rational& b) {
  return normalized(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den, "sub");
}

Rational operator*(const Rational& a, const Rational& b) {
  return normalized(i128(a.num) * b.num, i128(a.den) * b.den, "mul");
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num == 0) throw Error(Errc::InvalidParameters, "division by zero rational");
  return normalized(i128(a.num) * b.den, i128(a.den) * b.num, "div");
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num) * b.den < i128(b.num) * a.den;
}

std::complex<double> unit_phase(const Rational& turns) {
  Rational t = turns.mod1();
  if (t.num == 0) return {1.0, 0.0};
  if (t.den == 2) return {-1.0, 0.0};
  if (t.den == 4) return t.num == 1 ? std::complex<double>{0.0, 1.0}
                                    : std::complex<double>{0.0, -1.0};
  double angle = 2.0 * M_PI * t.value();
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace mdv
