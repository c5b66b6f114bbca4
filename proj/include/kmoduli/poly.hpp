#pragma once

#include <utility>
#include <vector>

#include "kmoduli/scalar.hpp"

namespace kmoduli {

/// Dense univariate polynomial over Q, lowest degree first.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rational& r) { return Poly({r}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  Scalar eval(const Scalar& x) const;

  Poly operator*(const Poly& o) const;
  Poly operator+(const Poly& o) const;
  Poly operator-() const;
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly scaled(const Rational& k) const;

  /// Divides by (x - r); returns quotient, requires r to be a root.
  Poly deflate(const Rational& r) const;

  Poly derivative() const;

  /// Euclidean division: *this = q * div + r with deg r < deg div.
  std::pair<Poly, Poly> divmod(const Poly& div) const;

  /// Monic gcd over Q.
  static Poly gcd(Poly a, Poly b);

  /// Multiplies through so coefficients are coprime integers with positive
  /// leading coefficient; zero stays zero.
  Poly primitive_normalized() const;

  /// Rational roots with multiplicity, via bounded divisor enumeration on
  /// the primitive integer model.
  std::vector<std::pair<Rational, int>> rational_roots() const;

  /// Unique interpolating polynomial of degree < points.size() (Lagrange).
  static Poly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

  std::string str(const std::string& var = "c") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace kmoduli
