#include "beauty/rational.hpp"

#include <cctype>
#include <limits>

#include "beauty/error.hpp"

namespace beauty {

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
  if (d == 0) throw Error("BAD_RATIONAL", "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  constexpr __int128 lo = std::numeric_limits<long long>::min();
  constexpr __int128 hi = std::numeric_limits<long long>::max();
  if (n < lo || n > hi || d > hi)
    throw Error("BAD_RATIONAL", "rational overflow");
  Rational r;
  r.num_ = static_cast<long long>(n);
  r.den_ = static_cast<long long>(d);
  return r;
}

Rational::Rational(long long n, long long d) {
  *this = from_wide(n, d);
}

Rational Rational::parse(const std::string& text) {
  auto fail = [&] { throw Error("BAD_RATIONAL", "malformed rational '" + text + "'"); };
  size_t pos = 0;
  auto read_int = [&]() -> long long {
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail();
    __int128 value = 0;
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > hi) fail();
      ++pos;
    }
    return negative ? -static_cast<long long>(value) : static_cast<long long>(value);
  };
  long long num = read_int();
  long long den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_int();
    if (den <= 0) fail();
  }
  if (pos != text.size()) fail();
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string out = std::to_string(num_);
  if (den_ != 1) out += "/" + std::to_string(den_);
  return out;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.den_ +
                       static_cast<__int128>(o.num_) * den_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return *this + (-o);
}

Rational Rational::operator*(const Rational& o) const {
  return from_wide(static_cast<__int128>(num_) * o.num_,
                   static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error("BAD_RATIONAL", "division by zero");
  return from_wide(static_cast<__int128>(num_) * o.den_,
                   static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

}  // namespace beauty
