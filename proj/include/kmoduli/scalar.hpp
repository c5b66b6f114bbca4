#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kmoduli/rational.hpp"

namespace kmoduli {

/// Exact element of Q or of a real quadratic field Q(sqrt(d)), stored as
/// a + b*sqrt(d). Invariants: d == 0 exactly when b == 0 (the rational
/// case); otherwise d >= 2 is a non-square with its square part removed.
///
/// Comparisons are decided by sign analysis of a, b and a^2 - b^2 d —
/// never by numeric evaluation. Mixing two distinct extensions throws
/// "field mismatch". Only degree <= 2 numbers exist here; anything that
/// would leave the tower is an error, not an approximation.
class Scalar {
public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long n) : a_(n), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& r) : a_(r), b_(0), d_(0) {}  // NOLINT
  Scalar(Rational a, Rational b, long d);

  const Rational& rat_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long field_d() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_.is_zero(); }

  /// The rational value; throws if the element is irrational.
  const Rational& as_rational() const;

  int sign() const;

  Scalar operator-() const { return Scalar::raw(-a_, -b_, d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& x, const Scalar& y) { return (x - y).is_zero(); }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

  Scalar inverse() const;

  /// Exact square root staying inside Q(sqrt(d)) (or lifting Q into a
  /// quadratic field); nullopt when no such root exists in degree <= 2.
  std::optional<Scalar> sqrt() const;

  /// Canonical encoding: "p/q" or "p/q + r/s*sqrt(d)".
  std::string str() const;

  /// Surd form "(p+r*sqrt(d))/q" over a common denominator; equals str()
  /// for rationals.
  std::string pretty() const;

  /// Truncated-toward-zero decimal with 12 digits, computed by integer
  /// square roots only (no floating point).
  std::string decimal12() const;

  double to_double() const;

  static Scalar parse(const std::string& text);

private:
  static Scalar raw(Rational a, Rational b, long d) {
    Scalar s;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    s.d_ = s.b_.is_zero() ? 0 : d;
    return s;
  }

  Rational a_, b_;
  long d_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

enum class Ordering { Less, Equal, Greater };

/// Exact total order on compatible scalars; throws "field mismatch" when the
/// operands live in genuinely different quadratic extensions.
Ordering compare(const Scalar& x, const Scalar& y);

/// Exact real roots of p2 x^2 + p1 x + p0, ascending, double roots listed
/// once. Rational when the discriminant is a perfect square, quadratic surds
/// otherwise. Throws "degenerate polynomial" when all coefficients vanish.
std::vector<Scalar> quad_roots(const Rational& p2, const Rational& p1, const Rational& p0);

}  // namespace kmoduli
