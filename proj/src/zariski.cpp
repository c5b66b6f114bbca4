#include "kmoduli/zariski.hpp"

#include <algorithm>
#include <optional>

namespace kmoduli {

namespace {

struct QuadT {
  Scalar q0, q1, q2;  // q0 + q1 t + q2 t^2

  Scalar at(const Scalar& t) const { return q0 + q1 * t + q2 * t * t; }
  bool is_zero() const { return q0.is_zero() && q1.is_zero() && q2.is_zero(); }
};

LinT pair_with(const SurfaceModel& m, const ClassPath& path, const DivisorClass& c) {
  LinT acc;
  for (size_t i = 0; i < m.rank(); ++i)
    for (size_t j = 0; j < m.rank(); ++j) {
      if (m.gram[i][j].is_zero()) continue;
      Scalar k = Scalar(m.gram[i][j]) * c.coords[j];
      if (k.is_zero()) continue;
      acc = acc + path.coords[i].scaled(k);
    }
  return acc;
}

QuadT self_pair(const SurfaceModel& m, const ClassPath& path) {
  QuadT acc;
  for (size_t i = 0; i < m.rank(); ++i)
    for (size_t j = 0; j < m.rank(); ++j) {
      if (m.gram[i][j].is_zero()) continue;
      const LinT& x = path.coords[i];
      const LinT& y = path.coords[j];
      Scalar g(m.gram[i][j]);
      acc.q0 += g * x.c0 * y.c0;
      acc.q1 += g * (x.c0 * y.c1 + x.c1 * y.c0);
      acc.q2 += g * x.c1 * y.c1;
    }
  return acc;
}

// ascending real roots of a quadratic with Scalar coefficients; stays inside
// the scalar tower or reports failure
std::vector<Scalar> quad_roots_scalar(const QuadT& q) {
  if (q.q2.is_zero()) {
    if (q.q1.is_zero()) return {};
    return {-q.q0 / q.q1};
  }
  Scalar disc = q.q1 * q.q1 - Scalar(4) * q.q2 * q.q0;
  int s = disc.sign();
  if (s < 0) return {};
  if (s == 0) return {-q.q1 / (Scalar(2) * q.q2)};
  auto root = disc.sqrt();
  if (!root) throw Error("irrational threshold", "ray event leaves the quadratic tower");
  Scalar inv = (Scalar(2) * q.q2).inverse();
  Scalar r1 = (-q.q1 - *root) * inv;
  Scalar r2 = (-q.q1 + *root) * inv;
  if (r1 > r2) std::swap(r1, r2);
  return {r1, r2};
}

// negative definiteness via leading principal minors: (-1)^k det_k > 0
bool negative_definite(const std::vector<std::vector<Scalar>>& g) {
  size_t n = g.size();
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Scalar>> a(k, std::vector<Scalar>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) a[i][j] = g[i][j];
    // exact determinant by elimination with row pivoting
    Scalar det(1);
    int swaps = 0;
    for (size_t col = 0; col < k; ++col) {
      size_t piv = col;
      while (piv < k && a[piv][col].is_zero()) ++piv;
      if (piv == k) return false;  // singular minor
      if (piv != col) {
        std::swap(a[piv], a[col]);
        ++swaps;
      }
      det *= a[col][col];
      for (size_t row = col + 1; row < k; ++row) {
        if (a[row][col].is_zero()) continue;
        Scalar f = a[row][col] / a[col][col];
        for (size_t j = col; j < k; ++j) a[row][j] -= f * a[col][j];
      }
    }
    if (swaps % 2 == 1) det = -det;
    int want = (k % 2 == 0) ? 1 : -1;
    if (det.sign() != want) return false;
  }
  return true;
}

// solves G n = rhs for constant G and affine rhs; G must be invertible
std::vector<LinT> solve_affine(std::vector<std::vector<Scalar>> g, std::vector<LinT> rhs) {
  size_t n = g.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && g[piv][col].is_zero()) ++piv;
    if (piv == n) throw Error("registry insufficient", "degenerate negative-part Gram matrix");
    std::swap(g[piv], g[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t row = 0; row < n; ++row) {
      if (row == col || g[row][col].is_zero()) continue;
      Scalar f = g[row][col] / g[col][col];
      for (size_t j = 0; j < n; ++j) g[row][j] -= f * g[col][j];
      rhs[row] = rhs[row] - rhs[col].scaled(f);
    }
  }
  std::vector<LinT> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = rhs[i].scaled(g[i][i].inverse());
  return out;
}

struct PieceState {
  std::vector<LinT> coeffs;  // per support curve
  ClassPath positive;
  QuadT square;
};

}  // namespace

DivisorClass ClassPath::at(const Scalar& t) const {
  DivisorClass out;
  out.coords.reserve(coords.size());
  for (const auto& c : coords) out.coords.push_back(c.at(t));
  return out;
}

ClassPath ClassPath::affine(const DivisorClass& base, const DivisorClass& slope) {
  if (base.rank() != slope.rank()) throw Error("dimension mismatch");
  ClassPath p;
  p.coords.reserve(base.rank());
  for (size_t i = 0; i < base.rank(); ++i)
    p.coords.push_back(LinT(base.coords[i], slope.coords[i]));
  return p;
}

Scalar RayDecomposition::positive_part_square_integral(const SurfaceModel& model) const {
  Scalar total(0);
  for (const auto& piece : pieces) {
    QuadT q = self_pair(model, piece.positive);
    auto anti = [&](const Scalar& t) {
      return q.q0 * t + q.q1 * t * t / Scalar(2) + q.q2 * t * t * t / Scalar(3);
    };
    total += anti(piece.hi) - anti(piece.lo);
  }
  return total;
}

std::vector<std::vector<std::string>> RayDecomposition::signature() const {
  std::vector<std::vector<std::string>> sig;
  for (const auto& piece : pieces) {
    std::vector<std::string> names;
    for (const auto& [nm, coeff] : piece.negative) names.push_back(nm);
    std::sort(names.begin(), names.end());
    sig.push_back(std::move(names));
  }
  return sig;
}

RayDecomposition decompose_ray(const SurfaceModel& model, const DivisorClass& start,
                               const DivisorClass& direction) {
  if (start.rank() != model.rank() || direction.rank() != model.rank())
    throw Error("dimension mismatch");
  if (direction.is_zero()) throw Error("bad parameter", "zero direction");

  ClassPath ray = ClassPath::affine(start, DivisorClass(direction).scaled(Scalar(-1)));
  const auto& curves = model.negative_curves;

  std::vector<size_t> support;
  auto solve_piece = [&](void) -> PieceState {
    PieceState st;
    size_t k = support.size();
    if (k > 0) {
      std::vector<std::vector<Scalar>> g(k, std::vector<Scalar>(k));
      std::vector<LinT> rhs(k);
      for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j)
          g[i][j] = intersect(model, curves[support[i]].cls, curves[support[j]].cls);
        rhs[i] = pair_with(model, ray, curves[support[i]].cls);
      }
      if (!negative_definite(g))
        throw Error("registry insufficient", "support Gram not negative definite");
      st.coeffs = solve_affine(g, rhs);
    }
    st.positive = ray;
    for (size_t i = 0; i < k; ++i) {
      const auto& cls = curves[support[i]].cls;
      for (size_t j = 0; j < model.rank(); ++j)
        st.positive.coords[j] = st.positive.coords[j] - st.coeffs[i].scaled(cls.coords[j]);
    }
    st.square = self_pair(model, st.positive);
    return st;
  };

  Scalar t0(0);

  // saturate the support at the ray origin
  for (size_t guard = 0; guard <= curves.size(); ++guard) {
    PieceState st = solve_piece();
    bool grew = false;
    for (size_t ci = 0; ci < curves.size(); ++ci) {
      if (std::find(support.begin(), support.end(), ci) != support.end()) continue;
      LinT f = pair_with(model, st.positive, curves[ci].cls);
      int v0 = f.at(t0).sign();
      if (v0 < 0 || (v0 == 0 && f.c1.sign() < 0)) {
        support.push_back(ci);
        grew = true;
        break;
      }
    }
    if (!grew) {
      for (const auto& n : st.coeffs)
        if (n.at(t0).sign() < 0)
          throw Error("not pseudo-effective", "negative Zariski coefficient at t = 0");
      if (st.square.at(t0).sign() < 0)
        throw Error("not pseudo-effective", "start class has negative volume");
      if (st.square.at(t0).sign() == 0)
        throw Error("not pseudo-effective", "start class is not big");
      break;
    }
    if (guard == curves.size())
      throw Error("registry insufficient", "support saturation did not settle");
  }

  RayDecomposition out;
  out.breakpoints.push_back(t0);

  const size_t max_pieces = 2 * curves.size() + 3;
  for (size_t iter = 0; iter < max_pieces; ++iter) {
    PieceState st = solve_piece();

    if (st.square.at(t0).sign() == 0) return out;  // threshold hit at a breakpoint

    struct Event {
      Scalar t;
      enum Kind { Entry, Exit, Stop } kind;
      size_t curve;
    };
    std::optional<Event> best;
    auto consider = [&](Event e) {
      if (e.t <= t0) return;
      if (!best || e.t < best->t) {
        best = e;
      } else if (e.t == best->t && best->kind != Event::Stop && e.kind == Event::Stop) {
        best = e;  // volume is non-increasing: once it vanishes the ray ends
      }
    };

    for (size_t ci = 0; ci < curves.size(); ++ci) {
      if (std::find(support.begin(), support.end(), ci) != support.end()) continue;
      LinT f = pair_with(model, st.positive, curves[ci].cls);
      if (f.c1.sign() < 0) consider({-f.c0 / f.c1, Event::Entry, ci});
    }
    for (size_t si = 0; si < support.size(); ++si) {
      const LinT& n = st.coeffs[si];
      if (n.c1.sign() < 0) consider({-n.c0 / n.c1, Event::Exit, si});
    }
    for (const Scalar& r : quad_roots_scalar(st.square)) consider({r, Event::Stop, 0});

    if (!best)
      throw Error("registry insufficient", "ray never reaches the pseudo-effective boundary");

    RayPiece piece;
    piece.lo = t0;
    piece.hi = best->t;
    piece.positive = st.positive;
    for (size_t si = 0; si < support.size(); ++si)
      piece.negative.emplace_back(curves[support[si]].name, st.coeffs[si]);
    out.pieces.push_back(std::move(piece));
    out.breakpoints.push_back(best->t);
    t0 = best->t;

    if (best->kind == Event::Stop) return out;
    if (best->kind == Event::Entry) {
      support.push_back(best->curve);
      // absorb simultaneous entries
      PieceState next = solve_piece();
      for (size_t ci = 0; ci < curves.size(); ++ci) {
        if (std::find(support.begin(), support.end(), ci) != support.end()) continue;
        LinT f = pair_with(model, next.positive, curves[ci].cls);
        int v = f.at(t0).sign();
        if (v < 0 || (v == 0 && f.c1.sign() < 0)) support.push_back(ci);
      }
    } else {
      support.erase(support.begin() + static_cast<long>(best->curve));
    }
  }
  throw Error("registry insufficient", "piece budget exhausted");
}

}  // namespace kmoduli
