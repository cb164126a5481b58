#include "csglab/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "csglab/errors.hpp"

namespace csglab {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::infinity() {
  Rational r;
  r.infinite_ = true;
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

const mpq_class& Rational::value() const {
  if (infinite_) throw std::domain_error("value() of infinite rational");
  return value_;
}

std::string Rational::numerator() const { return value().get_num().get_str(); }
std::string Rational::denominator() const { return value().get_den().get_str(); }

std::string Rational::str() const {
  if (infinite_) return "inf";
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::to_double() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  return value_.get_d();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (infinite_ || rhs.infinite_) {
    infinite_ = true;
    value_ = 0;
  } else {
    value_ += rhs.value_;
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (rhs.infinite_) throw std::domain_error("subtracting infinity");
  if (!infinite_) value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (infinite_ || rhs.infinite_) {
    const int s = (infinite_ ? 1 : sgn(value_)) * (rhs.infinite_ ? 1 : sgn(rhs.value_));
    if (s <= 0) throw std::domain_error("infinity times non-positive value");
    infinite_ = true;
    value_ = 0;
  } else {
    value_ *= rhs.value_;
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.infinite_) {
    if (infinite_) throw std::domain_error("infinity divided by infinity");
    value_ = 0;
    return *this;
  }
  if (sgn(rhs.value_) == 0) throw std::domain_error("division by zero");
  if (infinite_) {
    if (sgn(rhs.value_) < 0) throw std::domain_error("infinity divided by negative value");
    return *this;
  }
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  if (infinite_) throw std::domain_error("negating infinity");
  return Rational(mpq_class(-value_));
}

bool operator==(const Rational& lhs, const Rational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
  return lhs.value_ == rhs.value_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.infinite_ || rhs.infinite_) {
    return static_cast<int>(lhs.infinite_) <=> static_cast<int>(rhs.infinite_);
  }
  const int c = cmp(lhs.value_, rhs.value_);
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace csglab
