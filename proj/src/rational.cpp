#include "liegc/rational.hpp"

#include <ostream>

namespace liegc {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  // mpq_class accepts "p/q" directly but is lenient about whitespace; be
  // strict: digits with optional leading '-' on both sides of one '/'.
  auto digits_ok = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  Rational r;
  if (slash == std::string::npos) {
    if (!digits_ok(s)) throw std::invalid_argument("Rational: bad integer '" + s + "'");
    r.v_ = mpq_class(s);
  } else {
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den))
      throw std::invalid_argument("Rational: bad fraction '" + s + "'");
    r.v_ = mpq_class(s);
    if (r.v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  }
  r.v_.canonicalize();
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inv() const {
  if (v_ == 0) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace liegc
