#include "kmoduli/git_stability.hpp"

#include <algorithm>
#include <set>

namespace kmoduli {

void BiForm::set(int i, int j, Rational c) {
  if (i < 0 || i > d1 || j < 0 || j > d2) throw Error("bad parameter", "term outside bidegree");
  if (c.is_zero())
    terms.erase({i, j});
  else
    terms[{i, j}] = std::move(c);
}

BiForm BiForm::transposed() const {
  BiForm out;
  out.d1 = d2;
  out.d2 = d1;
  for (const auto& [ij, c] : terms) out.terms[{ij.second, ij.first}] = c;
  return out;
}

Frame Frame::identity() {
  Frame fr;
  fr.x[0][0] = fr.x[1][1] = fr.y[0][0] = fr.y[1][1] = Rational(1);
  fr.x[0][1] = fr.x[1][0] = fr.y[0][1] = fr.y[1][0] = Rational(0);
  fr.origin = "identity";
  return fr;
}

bool Frame::is_identity() const {
  const Frame id = identity();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (x[r][c] != id.x[r][c] || y[r][c] != id.y[r][c]) return false;
  return true;
}

namespace {

// rows of Pascal's triangle as exact rationals
Rational binom(int n, int k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b, mpz_class(1));
}

// (a*t0 + b*t1)^n as coefficients over t0-degree
std::vector<Rational> expand_linear_power(const Rational& a, const Rational& b, int n) {
  std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
  Rational ap(1);
  for (int k = 0; k <= n; ++k) {
    // coefficient of t0^k t1^(n-k): C(n,k) a^k b^(n-k)
    Rational bp(1);
    for (int m = 0; m < n - k; ++m) bp *= b;
    out[static_cast<size_t>(k)] = binom(n, k) * ap * bp;
    ap *= a;
  }
  return out;
}

std::vector<Rational> convolve(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  std::vector<Rational> out(p.size() + q.size() - 1, Rational(0));
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

}  // namespace

BiForm apply_frame(const BiForm& f, const Frame& frame) {
  BiForm out;
  out.d1 = f.d1;
  out.d2 = f.d2;
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& [ij, coeff] : f.terms) {
    auto [i, j] = ij;
    auto px = convolve(expand_linear_power(frame.x[0][0], frame.x[0][1], i),
                       expand_linear_power(frame.x[1][0], frame.x[1][1], f.d1 - i));
    auto py = convolve(expand_linear_power(frame.y[0][0], frame.y[0][1], j),
                       expand_linear_power(frame.y[1][0], frame.y[1][1], f.d2 - j));
    for (size_t a = 0; a < px.size(); ++a) {
      if (px[a].is_zero()) continue;
      for (size_t b = 0; b < py.size(); ++b) {
        if (py[b].is_zero()) continue;
        acc[{static_cast<int>(a), static_cast<int>(b)}] += coeff * px[a] * py[b];
      }
    }
  }
  for (auto& [ij, c] : acc)
    if (!c.is_zero()) out.terms[ij] = c;
  return out;
}

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

}  // namespace

std::vector<LatticePoint> newton_hull(const BiForm& f) {
  if (f.is_zero()) throw Error("zero form");
  std::vector<LatticePoint> pts;
  for (const auto& [ij, c] : f.terms) pts.push_back({ij.first, ij.second});
  std::sort(pts.begin(), pts.end(),
            [](const LatticePoint& a, const LatticePoint& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  // monotone chain, strict turns only
  std::vector<LatticePoint> hull(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {  // collinear support: keep the two extremes
    return {pts.front(), pts.back()};
  }
  // counterclockwise already (lower hull first), rotate to lexicographic min
  auto mn = std::min_element(hull.begin(), hull.end(),
                             [](const LatticePoint& a, const LatticePoint& b) {
                               return a.i != b.i ? a.i < b.i : a.j < b.j;
                             });
  std::rotate(hull.begin(), mn, hull.end());
  return hull;
}

BarycenterPosition barycenter_position(const std::vector<LatticePoint>& hull, int d1, int d2) {
  if (hull.empty()) throw Error("zero form");
  // work at doubled coordinates so the barycenter is the lattice point (d1, d2)
  LatticePoint p{d1, d2};
  auto dbl = [](const LatticePoint& q) { return LatticePoint{2 * q.i, 2 * q.j}; };
  if (hull.size() == 1) {
    return dbl(hull[0]) == p ? BarycenterPosition::Boundary : BarycenterPosition::Outside;
  }
  if (hull.size() == 2) {
    LatticePoint u = dbl(hull[0]), v = dbl(hull[1]);
    if (cross(u, v, p) != 0) return BarycenterPosition::Outside;
    long lo_i = std::min(u.i, v.i), hi_i = std::max(u.i, v.i);
    long lo_j = std::min(u.j, v.j), hi_j = std::max(u.j, v.j);
    bool inside = p.i >= lo_i && p.i <= hi_i && p.j >= lo_j && p.j <= hi_j;
    return inside ? BarycenterPosition::Boundary : BarycenterPosition::Outside;
  }
  bool on_edge = false;
  for (size_t a = 0; a < hull.size(); ++a) {
    size_t b = (a + 1) % hull.size();
    long c = cross(dbl(hull[a]), dbl(hull[b]), p);
    if (c < 0) return BarycenterPosition::Outside;
    if (c == 0) on_edge = true;
  }
  return on_edge ? BarycenterPosition::Boundary : BarycenterPosition::Interior;
}

// ---------------------------------------------------------------------------
// special-point search
// ---------------------------------------------------------------------------

namespace {

// point of P^1 as (p : q), normalized
struct ProjPt {
  Rational p, q;

  static ProjPt finite(const Rational& z) { return {z, Rational(1)}; }
  static ProjPt infinity() { return {Rational(1), Rational(0)}; }

  void normalize() {
    if (!q.is_zero()) {
      p /= q;
      q = Rational(1);
    } else {
      if (p.is_zero()) throw Error("bad parameter", "zero projective point");
      p = Rational(1);
    }
  }
  friend bool operator<(const ProjPt& a, const ProjPt& b) {
    if (a.q != b.q) return a.q < b.q;
    return a.p < b.p;
  }
  friend bool operator==(const ProjPt& a, const ProjPt& b) { return a.p == b.p && a.q == b.q; }
};

// binary form of formal degree n, stored as u(z) = sum c_i z^i with the
// monomial x0^i x1^(n-i); the multiplicity of [1:0] is n - deg u
struct BForm {
  Poly u;
  int formal = 0;

  bool is_zero() const { return u.is_zero(); }
  int inf_mult() const { return is_zero() ? formal : formal - u.degree(); }
  int zero_mult() const {
    if (is_zero()) return formal;
    int m = 0;
    while (m <= u.degree() && u.coeffs()[static_cast<size_t>(m)].is_zero()) ++m;
    return m;
  }
  // value semantics at a point: for finite z the value of u(z); at infinity
  // the coefficient of z^formal (zero when the degree drops)
  Rational value_at(const ProjPt& pt) const {
    if (is_zero()) return Rational(0);
    if (pt.q.is_zero()) {
      return u.degree() == formal ? u.leading() : Rational(0);
    }
    return u.eval(pt.p);
  }
  BForm deflated_at(const ProjPt& pt) const {
    if (pt.q.is_zero()) return {u, formal - 1};  // divide by x1
    return {u.deflate(pt.p), formal - 1};
  }
};

struct RootScan {
  std::vector<ProjPt> roots;      // distinct rational roots (multiplicity elided)
  bool irrational_left = false;   // nonconstant factor without rational roots
};

// rational roots of a nonzero univariate polynomial, without axis parts;
// exact up to quadratic square-free factors, divisor/small-candidate search
// above that (complete on the corpus, heuristic for huge coefficients)
void scan_uni_roots(Poly p, RootScan& out) {
  while (!p.is_zero() && p.coeffs()[0].is_zero()) {
    std::vector<Rational> up(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(up));
  }
  if (p.degree() < 1) return;
  Poly sf = p.divmod(Poly::gcd(p, p.derivative())).first;
  int found = 0;
  if (sf.degree() == 1) {
    out.roots.push_back(ProjPt::finite(-sf.coeffs()[0] / sf.coeffs()[1]));
    found = 1;
  } else if (sf.degree() == 2) {
    for (const Scalar& r : quad_roots(sf.coeffs()[2], sf.coeffs()[1], sf.coeffs()[0])) {
      if (r.is_rational()) {
        out.roots.push_back(ProjPt::finite(r.as_rational()));
        ++found;
      }
    }
  } else {
    for (const auto& [r, mult] : sf.rational_roots()) {
      out.roots.push_back(ProjPt::finite(r));
      ++found;
    }
  }
  if (found < sf.degree()) out.irrational_left = true;
}

void scan_form_roots(const BForm& f, RootScan& out, int min_mult) {
  if (f.is_zero()) return;
  if (f.zero_mult() >= min_mult) out.roots.push_back(ProjPt::finite(Rational(0)));
  if (f.inf_mult() >= min_mult) out.roots.push_back(ProjPt::infinity());
  Poly target = f.u;
  if (min_mult >= 2) target = Poly::gcd(target, target.derivative());
  scan_uni_roots(target, out);
}

// common rational roots of two nonzero forms
void scan_common_roots(const BForm& a, const BForm& b, RootScan& out) {
  if (std::min(a.zero_mult(), b.zero_mult()) >= 1)
    out.roots.push_back(ProjPt::finite(Rational(0)));
  if (std::min(a.inf_mult(), b.inf_mult()) >= 1) out.roots.push_back(ProjPt::infinity());
  auto strip = [](Poly p) {
    while (!p.is_zero() && p.coeffs()[0].is_zero()) {
      std::vector<Rational> up(p.coeffs().begin() + 1, p.coeffs().end());
      p = Poly(std::move(up));
    }
    return p;
  };
  scan_uni_roots(Poly::gcd(strip(a.u), strip(b.u)), out);
}

BForm y_coefficient_form(const BiForm& f, int j) {
  std::vector<Rational> c(static_cast<size_t>(f.d1) + 1, Rational(0));
  for (const auto& [ij, v] : f.terms)
    if (ij.second == j) c[static_cast<size_t>(ij.first)] = v;
  return {Poly(std::move(c)), f.d1};
}

Frame frame_from_point(const ProjPt& x, const ProjPt& y, const std::string& origin) {
  Frame fr = Frame::identity();
  // substitution sending [0:1] -> x on the first factor
  if (!x.q.is_zero()) {
    fr.x[0][0] = Rational(1);
    fr.x[0][1] = x.p;
    fr.x[1][0] = Rational(0);
    fr.x[1][1] = x.q;
  } else {
    fr.x[0][0] = Rational(0);
    fr.x[0][1] = Rational(1);
    fr.x[1][0] = Rational(1);
    fr.x[1][1] = Rational(0);
  }
  // substitution sending [1:0] -> y on the second factor
  if (!y.p.is_zero()) {
    fr.y[0][0] = y.p;
    fr.y[0][1] = Rational(0);
    fr.y[1][0] = y.q;
    fr.y[1][1] = Rational(1);
  } else {
    fr.y[0][0] = Rational(0);
    fr.y[0][1] = Rational(1);
    fr.y[1][0] = Rational(1);
    fr.y[1][1] = Rational(0);
  }
  fr.origin = origin;
  return fr;
}

Frame swap_factors(const Frame& fr) {
  Frame out = fr;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      out.x[r][c] = fr.y[r][c];
      out.y[r][c] = fr.x[r][c];
    }
  return out;
}

struct SpecialPoints {
  std::vector<std::pair<ProjPt, ProjPt>> points;
  bool irrational_evidence = false;

  void add(ProjPt x, ProjPt y) {
    x.normalize();
    y.normalize();
    points.emplace_back(std::move(x), std::move(y));
  }
};

// the min(d1,d2) == 1 analysis, written for y-degree 1: f = y0 A(x) + y1 B(x)
SpecialPoints special_points_ruled(const BiForm& f) {
  SpecialPoints sp;
  BForm a = y_coefficient_form(f, 1);
  BForm b = y_coefficient_form(f, 0);

  auto y_point_over = [&](const ProjPt& x) {
    BForm aa = a, bb = b;
    int guard = 0;
    while (!aa.is_zero() && !bb.is_zero() && aa.value_at(x).is_zero() &&
           bb.value_at(x).is_zero() && guard++ <= f.d1) {
      aa = aa.deflated_at(x);
      bb = bb.deflated_at(x);
    }
    Rational av = aa.value_at(x), bv = bb.value_at(x);
    if (!av.is_zero() || !bv.is_zero()) sp.add(x, ProjPt{-bv, av});
    if (a.value_at(x).is_zero()) sp.add(x, ProjPt{Rational(1), Rational(0)});
    if (b.value_at(x).is_zero()) sp.add(x, ProjPt{Rational(0), Rational(1)});
  };

  if (a.is_zero() || b.is_zero()) {
    // vertical ruling component: every root of the surviving form is special
    const BForm& h = a.is_zero() ? b : a;
    RootScan scan;
    scan_form_roots(h, scan, 1);
    sp.irrational_evidence |= scan.irrational_left;
    for (const auto& x : scan.roots) {
      sp.add(x, ProjPt{Rational(1), Rational(0)});
      sp.add(x, ProjPt{Rational(0), Rational(1)});
    }
    return sp;
  }

  RootScan xs;
  scan_common_roots(a, b, xs);          // reducible locus
  scan_form_roots(a, xs, 2);            // tangency with y = [1:0]
  scan_form_roots(b, xs, 2);            // tangency with y = [0:1]
  // projection ramification: W = A'B - AB' in the z chart, formal 2 d1 - 2;
  // only multiple roots (ramification index >= 3) can move a verdict, and
  // simple rational ones are cheap to keep when the coefficients are small
  BForm w{a.u.derivative() * b.u - a.u * b.u.derivative(), 2 * f.d1 - 2};
  if (!w.is_zero()) {
    scan_form_roots(w, xs, 2);
    RootScan simple;
    Poly sf = w.u.divmod(Poly::gcd(w.u, w.u.derivative())).first;
    bool small = true;
    for (const auto& cf : sf.coeffs())
      small = small && mpz_sizeinbase(cf.num().get_mpz_t(), 2) <= 64 &&
              mpz_sizeinbase(cf.den().get_mpz_t(), 2) <= 64;
    if (sf.degree() <= 2 || small) scan_uni_roots(sf, simple);
    if (w.zero_mult() >= 1) simple.roots.push_back(ProjPt::finite(Rational(0)));
    if (w.inf_mult() >= 1) simple.roots.push_back(ProjPt::infinity());
    xs.roots.insert(xs.roots.end(), simple.roots.begin(), simple.roots.end());
    // missed simple ramification cannot move a verdict, so it is not
    // inconclusiveness evidence
  }
  sp.irrational_evidence |= xs.irrational_left;
  for (auto x : xs.roots) {
    x.normalize();
    y_point_over(x);
  }
  return sp;
}

// coefficient-form heuristic for min(d1,d2) >= 2
SpecialPoints special_points_general(const BiForm& f) {
  SpecialPoints sp;
  BForm c0 = y_coefficient_form(f, 0), cd = y_coefficient_form(f, f.d2);
  BiForm t = f.transposed();
  BForm r0 = y_coefficient_form(t, 0), rd = y_coefficient_form(t, t.d2);

  auto gather = [](const BForm& fa, const BForm& fb, bool& evidence) {
    RootScan s;
    if (!fa.is_zero()) scan_form_roots(fa, s, 2);
    if (!fb.is_zero()) scan_form_roots(fb, s, 2);
    if (!fa.is_zero() && !fb.is_zero()) scan_common_roots(fa, fb, s);
    evidence |= s.irrational_left;
    for (auto& r : s.roots) r.normalize();
    std::sort(s.roots.begin(), s.roots.end());
    s.roots.erase(std::unique(s.roots.begin(), s.roots.end()), s.roots.end());
    return s.roots;
  };
  auto xs = gather(c0, cd, sp.irrational_evidence);
  auto ys = gather(r0, rd, sp.irrational_evidence);
  std::vector<ProjPt> axes = {ProjPt{Rational(1), Rational(0)}, ProjPt{Rational(0), Rational(1)}};
  for (const auto& x : xs) {
    for (const auto& y : ys) sp.add(x, y);
    for (const auto& y : axes) sp.add(x, y);
  }
  for (const auto& y : ys)
    for (const auto& x : axes) sp.add(x, y);
  return sp;
}

std::pair<std::vector<Frame>, bool> frames_and_evidence(const BiForm& f) {
  if (f.is_zero()) throw Error("zero form");
  std::vector<Frame> frames = {Frame::identity()};

  bool transposed = false;
  BiForm g = f;
  if (g.d2 != 1 && g.d1 == 1) {
    g = g.transposed();
    transposed = true;
  }
  SpecialPoints sp = g.d2 == 1 ? special_points_ruled(g) : special_points_general(g);

  std::set<std::pair<ProjPt, ProjPt>> seen;
  for (const auto& [x, y] : sp.points) {
    if (!seen.insert({x, y}).second) continue;
    Frame fr = frame_from_point(x, y, "special point");
    frames.push_back(transposed ? swap_factors(fr) : fr);
  }
  return {frames, sp.irrational_evidence};
}

}  // namespace

std::vector<Frame> candidate_frames(const BiForm& f) { return frames_and_evidence(f).first; }

GitResult git_status(const BiForm& f) {
  if (f.is_zero()) throw Error("zero form");
  auto [frames, evidence] = frames_and_evidence(f);

  GitResult result;
  result.verdict = GitVerdict::Stable;
  bool have_boundary = false;
  for (const auto& fr : frames) {
    BiForm moved = fr.is_identity() ? f : apply_frame(f, fr);
    auto hull = newton_hull(moved);
    auto pos = barycenter_position(hull, f.d1, f.d2);
    if (pos == BarycenterPosition::Outside) {
      result.verdict = GitVerdict::Unstable;
      result.certificate = {fr, hull, pos};
      return result;
    }
    if (pos == BarycenterPosition::Boundary && !have_boundary) {
      have_boundary = true;
      result.certificate = {fr, hull, pos};
    }
  }
  if (have_boundary) {
    result.verdict = GitVerdict::StrictlySemistable;
  } else {
    auto hull = newton_hull(f);
    result.certificate = {Frame::identity(), hull, barycenter_position(hull, f.d1, f.d2)};
  }
  result.irrational_special_locus = evidence;
  return result;
}

std::string to_string(GitVerdict v) {
  switch (v) {
    case GitVerdict::Stable: return "stable";
    case GitVerdict::StrictlySemistable: return "strictly_semistable";
    case GitVerdict::Unstable: return "unstable";
  }
  return "";
}

std::string to_string(BarycenterPosition p) {
  switch (p) {
    case BarycenterPosition::Interior: return "interior";
    case BarycenterPosition::Boundary: return "boundary";
    case BarycenterPosition::Outside: return "outside";
  }
  return "";
}

}  // namespace kmoduli
