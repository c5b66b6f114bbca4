#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "kmoduli/error.hpp"

namespace kmoduli {

/// Arbitrary-precision rational, always reduced, denominator > 0.
/// Thin wrapper over GMP's mpq_class so every invariant in the library is
/// computed without overflow.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : v_(n, d) { normalize(); }
  Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { normalize(); }
  explicit Rational(const mpq_class& q) : v_(q) { normalize(); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p" for integers, otherwise "p/q".
  std::string str() const;

  /// Parses "p" or "p/q" (optional sign, arbitrary precision).
  static Rational parse(const std::string& text);

  double to_double() const { return v_.get_d(); }

private:
  void normalize() {
    if (v_.get_den() == 0) throw Error("division by zero");
    v_.canonicalize();
  }

  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Floor of a/b for integers, b != 0.
mpz_class floor_div(const mpz_class& a, const mpz_class& b);

/// floor(sqrt(n)) for n >= 0.
mpz_class isqrt(const mpz_class& n);

/// Splits n > 0 as s^2 * m with m square-free (square factors found by
/// trial division up to 10^4 plus a perfect-square check on the remainder).
void split_square(const mpz_class& n, mpz_class& s, mpz_class& m);

}  // namespace kmoduli
