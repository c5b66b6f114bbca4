#include "kmoduli/fujita.hpp"

#include <algorithm>

namespace kmoduli {

Scalar log_discrepancy(const DivisorSpec& spec, const Scalar& c) {
  if (c.sign() < 0) throw Error("bad parameter", "negative boundary coefficient");
  if (spec.kind == DivisorSpec::Kind::PrimeOnSurface)
    return Scalar(1) - c * Scalar(spec.boundary_multiplicity);
  return Scalar(Rational(1) + spec.discrepancy_constant) - c * Scalar(spec.boundary_order);
}

Scalar RayProblem::volume(const Scalar& c) const {
  DivisorClass l = polarization(c);
  return intersect(model, l, l);
}

Scalar s_invariant(const RayProblem& problem, const Scalar& c) {
  RayDecomposition dec = decompose_ray(problem.model, problem.polarization(c), problem.direction);
  return dec.positive_part_square_integral(problem.model) / problem.volume(c);
}

Scalar beta(const RayProblem& problem, const Scalar& c) {
  return log_discrepancy(problem.spec, c) - s_invariant(problem, c);
}

Scalar flag_s_invariant(const Scalar& c) {
  if (c.sign() <= 0 || c >= Scalar(Rational(1, 2)))
    throw Error("bad parameter", "flag S needs 0 < c < 1/2");
  Scalar two_m_c = Scalar(2) - c;
  Scalar two_m_4c = Scalar(2) - Scalar(4) * c;
  // inner integral of (2-c-u) du over [0, 2-c] is (2-c)^2/2
  Scalar inner = two_m_c * two_m_c / Scalar(2);
  Scalar outer = inner * two_m_4c;  // constant in t over [0, 2-4c]
  return outer / (Scalar(2) * two_m_c * two_m_4c);
}

namespace {

std::vector<std::vector<std::string>> pattern_at(const RayProblem& pb, const Rational& c) {
  return decompose_ray(pb.model, pb.polarization(Scalar(c)), pb.direction).signature();
}

Rational beta_times_volume(const RayProblem& pb, const Rational& c) {
  Scalar v = beta(pb, Scalar(c)) * pb.volume(Scalar(c));
  return v.as_rational();
}

// maximal constant-signature subintervals of (lo, hi), found by sampling and
// bisection; depth-limited per the chamber-detection contract
void split_chambers(const RayProblem& pb, const Rational& lo, const Rational& hi,
                    std::vector<std::pair<Rational, Rational>>& out, int depth) {
  Rational mid = (lo + hi) / Rational(2);
  // probe at interior points near both ends and the middle
  Rational a = lo + (hi - lo) / Rational(64);
  Rational b = hi - (hi - lo) / Rational(64);
  auto pa = pattern_at(pb, a);
  auto pm = pattern_at(pb, mid);
  auto pb_ = pattern_at(pb, b);
  if (pa == pm && pm == pb_) {
    out.emplace_back(lo, hi);
    return;
  }
  if (depth <= 0) throw Error("chamber detection failed");
  split_chambers(pb, lo, mid, out, depth - 1);
  split_chambers(pb, mid, hi, out, depth - 1);
}

}  // namespace

WallScanResult wall_scan(const RayProblem& problem, int degree_bound,
                         std::optional<Rational> c_hi) {
  Rational hi;
  if (c_hi) {
    hi = *c_hi;
  } else {
    // bigness bound: first positive root of the quadratic V(c), capped at 1
    Poly vol_poly;
    {
      std::vector<std::pair<Rational, Rational>> pts;
      for (long i = 1; i <= 3; ++i) {
        Rational ci(i, 7);
        pts.emplace_back(ci, problem.volume(Scalar(ci)).as_rational());
      }
      vol_poly = Poly::interpolate(pts);
    }
    hi = Rational(1);
    std::vector<Rational> vc = vol_poly.coeffs();
    vc.resize(3, Rational(0));
    for (const Scalar& root : quad_roots(vc[2], vc[1], vc[0])) {
      if (root.sign() <= 0) continue;
      // irrational bound: fall back to a truncated rational lower bound
      Rational bound;
      if (root.is_rational()) {
        bound = root.as_rational();
      } else {
        std::string dec = root.decimal12();
        auto dot = dec.find('.');
        mpz_class scale("1000000000000");
        bound = Rational(mpz_class(dec.substr(0, dot)) * scale + mpz_class(dec.substr(dot + 1)),
                         scale);
      }
      if (bound.sign() > 0 && bound < hi) hi = bound;
    }
  }
  if (hi.sign() <= 0) throw Error("bad parameter", "empty scan interval");

  std::vector<std::pair<Rational, Rational>> intervals;
  split_chambers(problem, Rational(0), hi, intervals, 12);

  WallScanResult result;
  for (const auto& [lo, chi] : intervals) {
    Chamber chamber;
    chamber.lo = lo;
    chamber.hi = chi;
    Rational width = chi - lo;
    chamber.pattern = pattern_at(problem, lo + width / Rational(2));

    int samples = degree_bound + 3;  // +2 verification points
    std::vector<std::pair<Rational, Rational>> pts;
    for (int i = 1; i <= samples; ++i) {
      Rational ci = lo + width * Rational(i, samples + 1);
      pts.emplace_back(ci, beta_times_volume(problem, ci));
    }
    std::vector<std::pair<Rational, Rational>> fit_pts(pts.begin(), pts.begin() + degree_bound + 1);
    Poly raw = Poly::interpolate(fit_pts);
    for (int i = degree_bound + 1; i < samples; ++i) {
      if (raw.eval(pts[static_cast<size_t>(i)].first) != pts[static_cast<size_t>(i)].second)
        throw Error("chamber detection failed",
                    "interpolation degree bound exceeded on [" + lo.str() + ", " + chi.str() + "]");
    }

    if (raw.is_zero()) {
      chamber.numerator = Poly();
      chamber.reduced_numerator = Poly();
      result.chambers.push_back(std::move(chamber));
      continue;
    }

    chamber.numerator = raw.primitive_normalized();

    // strip rational roots, tracking parity for the sign-change test
    Poly residual = chamber.numerator;
    std::vector<std::pair<Rational, int>> rroots = residual.rational_roots();
    for (const auto& [r, mult] : rroots)
      for (int i = 0; i < mult; ++i) residual = residual.deflate(r);
    chamber.reduced_numerator = residual.primitive_normalized();

    std::vector<std::pair<Scalar, int>> candidates;
    for (const auto& [r, mult] : rroots) candidates.emplace_back(Scalar(r), mult);
    if (residual.degree() > 2)
      throw Error("wall degree overflow", "numerator stays above quadratic after root stripping");
    if (residual.degree() >= 1) {
      std::vector<Rational> rc = residual.coeffs();
      rc.resize(3, Rational(0));
      std::vector<Scalar> qr = quad_roots(rc[2], rc[1], rc[0]);
      int mult = (residual.degree() == 2 && qr.size() == 1) ? 2 : 1;
      for (const Scalar& r : qr) candidates.emplace_back(r, mult);
    }

    Scalar slo(lo), shi(chi);
    for (const auto& [root, mult] : candidates) {
      if (mult % 2 == 0) continue;  // no sign change
      if (root > slo && root < shi) chamber.walls.push_back(root);
    }
    std::sort(chamber.walls.begin(), chamber.walls.end(),
              [](const Scalar& x, const Scalar& y) { return x < y; });
    result.chambers.push_back(std::move(chamber));
  }

  for (const auto& chamber : result.chambers)
    for (const auto& w : chamber.walls) result.walls.push_back(w);
  std::sort(result.walls.begin(), result.walls.end(),
            [](const Scalar& x, const Scalar& y) { return x < y; });
  return result;
}

}  // namespace kmoduli
