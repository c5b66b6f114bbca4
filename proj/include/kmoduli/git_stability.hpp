#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmoduli/poly.hpp"

namespace kmoduli {

/// Bidegree (d1, d2) form on P^1 x P^1. Indexing convention, fixed here and
/// in the file format: a term (i, j) is the monomial
///   x0^i x1^(d1-i) y0^j y1^(d2-j),
/// so d1 is the x-degree and d2 the y-degree. The paper's "(1,4)-curves"
/// (class f1 + 4 f2) have x-degree 4 and y-degree 1, i.e. (d1, d2) = (4, 1)
/// here; the classification applies whenever {d1, d2} = {1, 4}.
struct BiForm {
  int d1 = 0, d2 = 0;
  std::map<std::pair<int, int>, Rational> terms;  // nonzero coefficients only

  void set(int i, int j, Rational c);
  bool is_zero() const { return terms.empty(); }
  BiForm transposed() const;
};

/// Coordinate change on both factors: substitution matrices applied as
/// x -> X*(x0,x1)^T, y -> Y*(y0,y1)^T. Both must be invertible.
struct Frame {
  Rational x[2][2];
  Rational y[2][2];
  std::string origin;  // how the frame was found, for certificates

  static Frame identity();
  bool is_identity() const;
};

/// f(X x, Y y), expanded exactly.
BiForm apply_frame(const BiForm& f, const Frame& frame);

struct LatticePoint {
  long i, j;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Convex hull of the support, counterclockwise, starting at the
/// lexicographically smallest vertex; collinear interior points dropped.
std::vector<LatticePoint> newton_hull(const BiForm& f);

enum class BarycenterPosition { Interior, Boundary, Outside };

/// Exact position of (d1/2, d2/2) relative to the hull.
BarycenterPosition barycenter_position(const std::vector<LatticePoint>& hull, int d1, int d2);

/// Frames moving each rational special point — common roots of the two
/// y-coefficient forms, multiple roots of each, and higher-ramification
/// points of the projection (multiple roots of the Wronskian) — to
/// ([0:1], [1:0]), plus the identity. Complete for rational special points
/// when min(d1,d2) == 1; a coarser coefficient-form heuristic otherwise.
std::vector<Frame> candidate_frames(const BiForm& f);

enum class GitVerdict { Stable, StrictlySemistable, Unstable };

struct GitCertificate {
  Frame frame;
  std::vector<LatticePoint> hull;
  BarycenterPosition position;
};

struct GitResult {
  GitVerdict verdict;
  GitCertificate certificate;
  /// Set when the special locus is provably nonempty but has no rational
  /// member, so the frame search could not inspect it ("stable modulo
  /// irrational special points").
  bool irrational_special_locus = false;
};

/// Hilbert-Mumford over the torus in every candidate frame: unstable iff
/// some frame pushes the barycenter outside the hull, strictly semistable
/// iff never outside but some frame puts it on the boundary, else stable.
GitResult git_status(const BiForm& f);

std::string to_string(GitVerdict v);
std::string to_string(BarycenterPosition p);

}  // namespace kmoduli
