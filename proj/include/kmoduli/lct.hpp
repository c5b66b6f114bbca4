#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmoduli/rational.hpp"

namespace kmoduli {

enum class FiberAxis { X, Y };

/// Plane-curve germ f = sum c_{ab} x^a y^b with a fiber coordinate and a
/// boundary coefficient a on the curve (the fibrations in scope use 1/2).
/// f must vanish at the origin. A fiber-divisible factor g^k is legal input
/// and is split off onto the fiber with coefficient a*k before thresholding.
struct LocalPair {
  std::map<std::pair<long, long>, Rational> support;  // (x-exp, y-exp) -> coefficient
  FiberAxis fiber = FiberAxis::Y;
  Rational a = Rational(1, 2);

  void set(long alpha, long beta, Rational c);
};

struct ThresholdResult {
  Rational lct;
  Rational b;  // 1 - lct, the boundary-part coefficient
  std::pair<long, long> witness_weight;
};

/// lct(X, a*D; F) for the germ against the fiber line, by minimizing
/// (w1 + w2 - a*v_w(f) - a*k*v_w(g)) / v_w(g) over the inner normals of the
/// Newton polygon together with the axis weights and (1,1), where v_w is the
/// weighted vanishing order, g the fiber coordinate and k the split-off
/// fiber multiplicity; clamped at 1.
ThresholdResult lct_along_fiber(const LocalPair& p);

/// Same ratio minimized over every primitive weight pair with entries up to
/// the bound; the independent check used by the test suite.
Rational lct_bruteforce_oracle(const LocalPair& p, long bound);

/// Compact edges of the Newton polygon whose edge polynomial has a critical
/// zero in the torus (a repeated nonzero root); empty means the germ is
/// Newton-nondegenerate as far as the threshold computation needs.
std::vector<std::string> degenerate_edges(const LocalPair& p);

struct TableRow {
  std::string label;
  LocalPair pair;
  Rational expected_lct;
  Rational got_lct;
  bool match;
  bool oracle_match;
  bool nondegenerate;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_pass;
};

/// Reruns every fixture: the six unibranched rows, the eight non-unibranched
/// rows (generic parameters pinned at a=1, b=-1, m=4 with distinctness
/// checks), and the six fiber-polynomial thresholds 5/6, 3/4, 2/3, 3/4,
/// 1/2, 1/2.
TableReport table_regression(long oracle_bound = 50);

}  // namespace kmoduli
