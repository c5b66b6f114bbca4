#include "kmoduli/scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace kmoduli {

namespace {

// sqrt of a nonnegative rational as a Scalar: s/q or (s/q)*sqrt(m).
Scalar rational_sqrt(const Rational& x) {
  if (x.sign() < 0) throw Error("negative radicand");
  if (x.is_zero()) return Scalar(0);
  mpz_class s, m;
  split_square(x.num() * x.den(), s, m);
  Rational coeff(s, x.den());
  if (m == 1) return Scalar(coeff);
  if (!m.fits_slong_p()) throw Error("radicand too large");
  return Scalar(Rational(0), coeff, m.get_si());
}

}  // namespace

Scalar::Scalar(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_.is_zero()) {
    d_ = 0;
    return;
  }
  if (d_ <= 0) throw Error("bad extension", "d must be positive for an irrational part");
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
    d_ = 0;
    return;
  }
  mpz_class s, m;
  split_square(mpz_class(d_), s, m);
  if (s != 1) {
    // fold the square part of d into b
    b_ *= Rational(s, 1);
    d_ = m.get_si();
    if (d_ == 1) {
      a_ += b_;
      b_ = Rational(0);
      d_ = 0;
    }
  }
}

const Rational& Scalar::as_rational() const {
  if (!is_rational()) throw Error("irrational scalar", str());
  return a_;
}

int Scalar::sign() const {
  if (d_ == 0) return a_.sign();
  int sa = a_.sign(), sb = b_.sign();
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  if (sa == sb) return sa;
  // opposite signs: |a| vs |b| sqrt(d) decided by squaring
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_, 1);
  return sa * norm.sign();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (d_ != 0 && o.d_ != 0 && d_ != o.d_) throw Error("field mismatch");
  long d = d_ != 0 ? d_ : o.d_;
  *this = raw(a_ + o.a_, b_ + o.b_, d);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (d_ != 0 && o.d_ != 0 && d_ != o.d_) throw Error("field mismatch");
  long d = d_ != 0 ? d_ : o.d_;
  Rational rd(d, 1);
  Rational na = a_ * o.a_ + b_ * o.b_ * rd;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  *this = raw(na, nb, d);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (d_ == 0) return Scalar(Rational(1) / a_);
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_, 1);
  // norm != 0: sqrt(d) is irrational
  return raw(a_ / norm, -b_ / norm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::optional<Scalar> Scalar::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (d_ == 0) return rational_sqrt(a_);
  // want (u + v*sqrt(d))^2 = a + b*sqrt(d): u^2 = (a ± s)/2 with
  // s = sqrt(a^2 - b^2 d) rational, v = b/(2u)
  Rational norm = a_ * a_ - b_ * b_ * Rational(d_, 1);
  if (norm.sign() < 0) return std::nullopt;
  Scalar s = rational_sqrt(norm);
  if (!s.is_rational()) return std::nullopt;
  for (int pick : {1, -1}) {
    Rational usq = (a_ + (pick > 0 ? s.as_rational() : -s.as_rational())) / Rational(2);
    if (usq.sign() < 0) continue;
    Scalar u = rational_sqrt(usq);
    if (!u.is_rational() || u.is_zero()) continue;
    Rational uu = u.as_rational();
    Scalar cand = raw(uu, b_ / (Rational(2) * uu), d_);
    if (cand * cand == *this) return cand.sign() >= 0 ? cand : -cand;
  }
  return std::nullopt;
}

std::string Scalar::str() const {
  if (d_ == 0) return a_.str();
  return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

std::string Scalar::pretty() const {
  if (d_ == 0) return a_.str();
  mpz_class q = lcm(a_.den(), b_.den());
  mpz_class p = a_.num() * (q / a_.den());
  mpz_class r = b_.num() * (q / b_.den());
  std::string surd = "sqrt(" + std::to_string(d_) + ")";
  std::string rs = r == 1 ? surd : (r == -1 ? "-" + surd : r.get_str() + "*" + surd);
  std::string core;
  if (p == 0) {
    core = rs;
  } else if (r > 0) {
    core = p.get_str() + "+" + rs;
  } else {
    core = p.get_str() + "-" + (r == -1 ? surd : mpz_class(-r).get_str() + "*" + surd);
  }
  if (q == 1) return p == 0 ? rs : "(" + core + ")";
  return "(" + core + ")/" + q.get_str();
}

std::string Scalar::decimal12() const {
  const int kDigits = 12;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, kDigits);
  bool neg = sign() < 0;
  Scalar x = neg ? -*this : *this;
  // x*scale = (P + R*sqrt(d))/Q with Q > 0; floor via integer sqrt
  Rational A = x.a_ * Rational(scale, 1);
  Rational B = x.b_ * Rational(scale, 1);
  mpz_class Q = lcm(A.den(), B.den());
  mpz_class P = A.num() * (Q / A.den());
  mpz_class R = B.num() * (Q / B.den());
  mpz_class surd_floor = 0;
  if (R != 0) {
    mpz_class rad = R * R * x.d_;
    surd_floor = isqrt(rad);
    if (R < 0) surd_floor = -(surd_floor + 1);  // sqrt irrational here
  }
  mpz_class F = floor_div(P + surd_floor, Q);
  mpz_class ip = F / scale;
  mpz_class fp = F % scale;
  std::string frac = fp.get_str();
  frac.insert(0, kDigits - frac.size(), '0');
  return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

double Scalar::to_double() const {
  double v = a_.to_double();
  if (d_ != 0) v += b_.to_double() * std::sqrt(static_cast<double>(d_));
  return v;
}

Scalar Scalar::parse(const std::string& text) {
  auto strip = [](std::string s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string t = strip(text);
  auto star = t.find("*sqrt(");
  if (star == std::string::npos) {
    if (t.find("sqrt") != std::string::npos) throw Error("parse error", "bad scalar '" + text + "'");
    return Scalar(Rational::parse(t));
  }
  // split "A + B*sqrt(d)" on the last +/- before B (B carries its own sign)
  auto close = t.find(')', star);
  if (close == std::string::npos) throw Error("parse error", "bad scalar '" + text + "'");
  long d = std::stol(t.substr(star + 6, close - star - 6));
  // find the separating " + " scanning left from the surd coefficient
  size_t sep = t.rfind(" + ", star);
  Rational a(0), b(0);
  if (sep == std::string::npos) {
    b = Rational::parse(strip(t.substr(0, star)));
  } else {
    a = Rational::parse(strip(t.substr(0, sep)));
    b = Rational::parse(strip(t.substr(sep + 3, star - sep - 3)));
  }
  return Scalar(a, b, d);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Ordering compare(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return Ordering::Less;
  if (s > 0) return Ordering::Greater;
  return Ordering::Equal;
}

std::vector<Scalar> quad_roots(const Rational& p2, const Rational& p1, const Rational& p0) {
  if (p2.is_zero() && p1.is_zero() && p0.is_zero()) throw Error("degenerate polynomial");
  if (p2.is_zero()) {
    if (p1.is_zero()) return {};  // nonzero constant
    return {Scalar(-p0 / p1)};
  }
  Rational disc = p1 * p1 - Rational(4) * p2 * p0;
  int ds = disc.sign();
  if (ds < 0) return {};
  Rational inv2a = Rational(1) / (Rational(2) * p2);
  if (ds == 0) return {Scalar(-p1 * inv2a)};
  Scalar root = rational_sqrt(disc);
  Scalar lo = (Scalar(-p1) - root) * Scalar(inv2a);
  Scalar hi = (Scalar(-p1) + root) * Scalar(inv2a);
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

}  // namespace kmoduli
