#include "eulerlab/rational.hpp"

#include <cctype>
#include <limits>

#include "eulerlab/error.hpp"

namespace eulerlab {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
  if (d == 0) fail(ErrorKind::Domain, "rational division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr auto lo = static_cast<__int128>(std::numeric_limits<std::int64_t>::min()) + 1;
  constexpr auto hi = static_cast<__int128>(std::numeric_limits<std::int64_t>::max());
  if (n < lo || n > hi || d > hi) fail(ErrorKind::Overflow, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  if (r.num_ == 0) r.den_ = 1;
  return r;
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = from_wide(n, d); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                    static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  *this = from_wide(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(ErrorKind::Domain, "rational division by zero");
  *this = from_wide(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ <=> static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](__int128& value, int& count) {
    count = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()))
        fail(ErrorKind::Overflow, "number too large: " + text);
      ++count;
      ++i;
    }
  };
  __int128 n = 0;
  __int128 d = 1;
  int count = 0;
  digits(n, count);
  if (count == 0) fail(ErrorKind::Parse, "expected a number, got '" + text + "'");
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      n = n * 10 + (text[i] - '0');
      d *= 10;
      if (n > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()) ||
          d > static_cast<__int128>(std::numeric_limits<std::int64_t>::max()))
        fail(ErrorKind::Overflow, "number too long: " + text);
      ++i;
    }
  } else if (i < text.size() && text[i] == '/') {
    ++i;
    __int128 dd = 0;
    digits(dd, count);
    if (count == 0) fail(ErrorKind::Parse, "bad denominator in '" + text + "'");
    d = dd;
  }
  if (i != text.size()) fail(ErrorKind::Parse, "trailing characters in number '" + text + "'");
  return from_wide(neg ? -n : n, d);
}

}  // namespace eulerlab
