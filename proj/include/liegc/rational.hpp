#pragma once
// ---- exact rational scalars ----
//
// Thin wrapper around GMP's mpq_class.  Every value is kept in lowest terms
// with a positive denominator; there is no floating point anywhere in the
// library.  Serialization is "p/q" ("p" when q = 1).

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace liegc {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);

  /// Parse "p/q" or "p" (base 10, optional leading '-').  Throws
  /// std::invalid_argument on malformed input or zero denominator.
  static Rational from_string(const std::string& s);

  /// Canonical string form: "p/q" in lowest terms, "p" when q = 1.
  std::string str() const;

  bool is_zero() const { return v_ == 0; }
  int sgn() const { return ::sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inv() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

}  // namespace liegc
