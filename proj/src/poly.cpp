#include "kmoduli/poly.hpp"

#include <algorithm>
#include <sstream>

namespace kmoduli {

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Scalar(*it);
  return acc;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(out));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Poly(std::move(out));
}

Poly Poly::operator-() const {
  std::vector<Rational> out = c_;
  for (auto& v : out) v = -v;
  return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& k) const {
  std::vector<Rational> out = c_;
  for (auto& v : out) v *= k;
  return Poly(std::move(out));
}

Poly Poly::deflate(const Rational& r) const {
  if (is_zero()) throw Error("deflate of zero polynomial");
  std::vector<Rational> out(c_.size() - 1, Rational(0));
  Rational carry(0);
  for (int i = degree(); i >= 1; --i) {
    carry = c_[i] + carry * r;
    out[i - 1] = carry;
  }
  if (c_[0] + carry * r != Rational(0)) throw Error("deflate without root");
  return Poly(std::move(out));
}

Poly Poly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& div) const {
  if (div.is_zero()) throw Error("division by zero", "polynomial divisor");
  Poly rem = *this;
  std::vector<Rational> q(std::max<int>(degree() - div.degree() + 1, 0), Rational(0));
  while (!rem.is_zero() && rem.degree() >= div.degree()) {
    int shift = rem.degree() - div.degree();
    Rational k = rem.leading() / div.leading();
    q[static_cast<size_t>(shift)] = k;
    std::vector<Rational> sub(static_cast<size_t>(shift), Rational(0));
    sub.insert(sub.end(), div.c_.begin(), div.c_.end());
    Poly subtrahend = Poly(std::move(sub)).scaled(k);
    rem = rem - subtrahend;
    if (!rem.is_zero() && rem.degree() == shift + div.degree()) {
      // leading term must cancel; force-trim numerical survivors (exact: none)
      throw Error("division failure");
    }
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

Poly Poly::primitive_normalized() const {
  if (is_zero()) return {};
  mpz_class den(1);
  for (const auto& v : c_) den = lcm(den, v.den());
  mpz_class g(0);
  for (const auto& v : c_) g = ::gcd(g, v.num() * (den / v.den()));
  Rational k(den, g);
  if (leading().sign() < 0) k = -k;
  return scaled(k);
}

std::vector<std::pair<Rational, int>> Poly::rational_roots() const {
  std::vector<std::pair<Rational, int>> roots;
  if (is_zero()) return roots;
  Poly p = primitive_normalized();
  // strip roots at zero
  int zero_mult = 0;
  while (!p.is_zero() && p.coeffs()[0].is_zero()) {
    std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(shifted));
    ++zero_mult;
  }
  if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
  if (p.degree() < 1) return roots;

  auto divisors = [](const mpz_class& n) {
    std::vector<mpz_class> out;
    mpz_class a = abs(n);
    // trial scan capped at 2e6; huge semiprime coefficients may lose roots,
    // which callers treat as a heuristic miss
    for (mpz_class i = 1; i * i <= a && i <= 2000000 && out.size() < 4096; ++i) {
      if (mpz_divisible_p(a.get_mpz_t(), i.get_mpz_t())) {
        out.push_back(i);
        out.push_back(a / i);
      }
    }
    return out;
  };
  auto tail = p.coeffs()[0].num();
  auto lead = p.leading().num();
  for (const auto& u : divisors(tail)) {
    for (const auto& v : divisors(lead)) {
      for (int s : {1, -1}) {
        Rational cand(s * u, v);
        int mult = 0;
        while (!p.is_zero() && p.degree() >= 1 && p.eval(cand).is_zero()) {
          p = p.deflate(cand);
          ++mult;
        }
        if (mult > 0) roots.emplace_back(cand, mult);
        if (p.degree() < 1) break;
      }
    }
    if (p.degree() < 1) break;
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return roots;
}

Poly Poly::interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  Poly acc;
  for (size_t i = 0; i < points.size(); ++i) {
    Poly basis({Rational(1)});
    Rational denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * Poly({-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    acc = acc + basis.scaled(points[i].second / denom);
  }
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& v = c_[i];
    if (v.is_zero()) continue;
    if (!first) os << (v.sign() > 0 ? " + " : " - ");
    else if (v.sign() < 0) os << "-";
    Rational av = v.abs();
    if (i == 0 || av != Rational(1)) os << av.str();
    if (i >= 1) {
      if (av != Rational(1)) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace kmoduli
