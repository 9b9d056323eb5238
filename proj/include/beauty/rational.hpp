#pragma once

#include <cstdint>
#include <string>

namespace beauty {

// Exact rational number on 64-bit numerator/denominator, always stored in
// lowest terms with a positive denominator. Intermediate products are
// widened to 128 bits; a result that does not fit back into 64 bits throws.
// All probabilities, payoffs and credences in this library are Rationals;
// no floating point enters any core computation.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  // Parses "p/q" or "n" (optional leading '-'). Anything else, including
  // decimal literals like "0.5" and zero denominators, throws BAD_RATIONAL.
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }

  // Canonical text form: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  // Display-only conversion; never used in core arithmetic.
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

private:
  static Rational from_wide(__int128 n, __int128 d);

  long long num_;
  long long den_;
};

}  // namespace beauty
