#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace csglab {

/// Exact arbitrary-precision fraction with a distinguished +infinity.
///
/// Finite values are kept in canonical form (positive denominator, reduced).
/// Infinity absorbs addition, dominates every comparison and is equal only to
/// itself. Operations without a meaningful value (inf - inf, 0 * inf, x / 0)
/// throw std::domain_error.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  static Rational infinity();
  /// Accepts "a", "a/b" (optional leading '-') and "inf". Throws ParseError.
  static Rational parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  bool is_zero() const noexcept { return !infinite_ && sgn(value_) == 0; }
  int sign() const noexcept { return infinite_ ? 1 : sgn(value_); }

  /// The finite value; throws std::domain_error on infinity.
  const mpq_class& value() const;
  std::string numerator() const;
  std::string denominator() const;

  /// "num/den" (always with a denominator) or "inf".
  std::string str() const;
  double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs);
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  mpq_class value_{0};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

}  // namespace csglab
