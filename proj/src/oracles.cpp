#include "kmoduli/oracles.hpp"

#include <cstdlib>

namespace kmoduli {
namespace oracles {

Rational volume_at(const SurfaceModel& model, const DivisorClass& cls) {
  const auto& curves = model.negative_curves;
  std::vector<size_t> support;
  for (size_t rounds = 0; rounds <= curves.size() + 1; ++rounds) {
    // solve P = cls - sum n_i C_i with P.C_i = 0 on the support
    size_t k = support.size();
    std::vector<std::vector<Scalar>> g(k, std::vector<Scalar>(k));
    std::vector<Scalar> rhs(k);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j)
        g[i][j] = intersect(model, curves[support[i]].cls, curves[support[j]].cls);
      rhs[i] = intersect(model, cls, curves[support[i]].cls);
    }
    // gaussian elimination
    for (size_t col = 0; col < k; ++col) {
      size_t piv = col;
      while (piv < k && g[piv][col].is_zero()) ++piv;
      if (piv == k) return Rational(0);
      std::swap(g[piv], g[col]);
      std::swap(rhs[piv], rhs[col]);
      for (size_t row = 0; row < k; ++row) {
        if (row == col || g[row][col].is_zero()) continue;
        Scalar f = g[row][col] / g[col][col];
        for (size_t j = 0; j < k; ++j) g[row][j] -= f * g[col][j];
        rhs[row] -= f * rhs[col];
      }
    }
    DivisorClass p = cls;
    for (size_t i = 0; i < k; ++i) {
      Scalar n = rhs[i] / g[i][i];
      if (n.sign() < 0) return Rational(0);  // left the pseudo-effective cone
      p = p - curves[support[i]].cls.scaled(n);
    }
    bool grew = false;
    for (size_t ci = 0; ci < curves.size(); ++ci) {
      if (std::find(support.begin(), support.end(), ci) != support.end()) continue;
      if (intersect(model, p, curves[ci].cls).sign() < 0) {
        support.push_back(ci);
        grew = true;
        break;
      }
    }
    if (!grew) {
      Scalar sq = intersect(model, p, p);
      return sq.sign() <= 0 ? Rational(0) : sq.as_rational();
    }
  }
  return Rational(0);
}

Rational riemann_s_integral(const RayProblem& problem, const Rational& c, long panels) {
  if (panels < 1) throw Error("bad parameter", "panel count must be positive");
  DivisorClass start = problem.polarization(Scalar(c));
  RayDecomposition dec = decompose_ray(problem.model, start, problem.direction);
  Rational total(0);
  for (size_t i = 0; i + 1 < dec.breakpoints.size(); ++i) {
    Rational lo = dec.breakpoints[i].as_rational();
    Rational hi = dec.breakpoints[i + 1].as_rational();
    Rational h = (hi - lo) / Rational(panels);
    Rational acc(0);
    for (long k = 0; k < panels; ++k) {
      Rational t = lo + h * (Rational(k) + Rational(1, 2));
      DivisorClass cls = start - problem.direction.scaled(Scalar(t));
      acc += volume_at(problem.model, cls);
    }
    total += acc * h;
  }
  return total;
}

long oracle_panels() {
  if (const char* env = std::getenv("KMODULI_ORACLE_PANELS")) {
    long v = std::atol(env);
    if (v > 0) return v;
  }
  return 10000;
}

int interval_sign(const Scalar& x, int digits) {
  if (x.is_rational()) return x.rat_part().sign();
  // exact-zero test first: a^2 == b^2 d with opposite signs
  const Rational& a = x.rat_part();
  const Rational& b = x.surd_part();
  Rational norm = a * a - b * b * Rational(x.field_d());
  if (norm.is_zero() && a.sign() != b.sign()) return 0;
  for (int prec = digits; prec <= 4 * digits; prec *= 2) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(prec));
    // bracket sqrt(d): lo/scale <= sqrt(d) <= hi/scale
    mpz_class lo = isqrt(mpz_class(x.field_d()) * scale * scale);
    mpz_class hi = lo + 1;
    Rational sq_lo(lo, scale), sq_hi(hi, scale);
    Rational v_lo = b.sign() >= 0 ? a + b * sq_lo : a + b * sq_hi;
    Rational v_hi = b.sign() >= 0 ? a + b * sq_hi : a + b * sq_lo;
    if (v_lo.sign() > 0) return 1;
    if (v_hi.sign() < 0) return -1;
  }
  throw Error("interval refinement exhausted");
}

}  // namespace oracles
}  // namespace kmoduli
