#include "kmoduli/rational.hpp"

#include <ostream>

namespace kmoduli {

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(text), mpz_class(1));
    }
    mpz_class n(text.substr(0, slash));
    mpz_class d(text.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    throw Error("parse error", "bad rational '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class isqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

void split_square(const mpz_class& n, mpz_class& s, mpz_class& m) {
  s = 1;
  m = 1;
  mpz_class rest = n;
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    s = isqrt(rest);
    return;
  }
  for (long p = 2; p <= 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    mpz_class p2 = mpz_class(p) * p;
    while (mpz_divisible_p(rest.get_mpz_t(), p2.get_mpz_t())) {
      rest /= p2;
      s *= p;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
      rest /= p;
      m *= p;
    }
  }
  if (mpz_perfect_square_p(rest.get_mpz_t())) {
    s *= isqrt(rest);
  } else {
    m *= rest;
  }
}

}  // namespace kmoduli
