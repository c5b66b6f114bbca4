#include "kmoduli/suite.hpp"

#include <chrono>
#include <ostream>
#include <random>
#include <sstream>

#include "kmoduli/basecurve.hpp"
#include "kmoduli/cbf.hpp"
#include "kmoduli/fixtures.hpp"
#include "kmoduli/git_stability.hpp"
#include "kmoduli/lct.hpp"
#include "kmoduli/models.hpp"
#include "kmoduli/oracles.hpp"

namespace kmoduli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  CriterionResult result;

  Check(int id, std::string title) { result = {id, std::move(title), true, {}}; }

  void require(bool ok, const std::string& what) {
    if (!ok) {
      result.pass = false;
      result.notes.push_back("FAIL: " + what);
    }
  }
  void note(const std::string& what) { result.notes.push_back(what); }
};

std::vector<Rational> four_c() {
  return {Rational(1, 10), Rational(1, 5), Rational(1, 4), Rational(2, 5)};
}

BiForm c0_curve() {
  BiForm f;
  f.d1 = 4;
  f.d2 = 1;
  f.set(4, 1, Rational(1));
  f.set(0, 0, Rational(-1));
  return f;
}

BiForm c1_curve() {
  BiForm f;
  f.d1 = 4;
  f.d2 = 1;
  f.set(3, 1, Rational(1));
  f.set(1, 0, Rational(-1));
  return f;
}

BiForm monomial_x4y0() {
  BiForm f;
  f.d1 = 4;
  f.d2 = 1;
  f.set(4, 1, Rational(1));
  return f;
}

// random (4,1)-form f = y0 A + y1 B with A, B coprime quartics, i.e. smooth
BiForm random_smooth_41(std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  while (true) {
    BiForm f;
    f.d1 = 4;
    f.d2 = 1;
    std::vector<Rational> a(5), b(5);
    for (int i = 0; i <= 4; ++i) {
      a[static_cast<size_t>(i)] = Rational(coeff(rng));
      b[static_cast<size_t>(i)] = Rational(coeff(rng));
      f.set(i, 1, a[static_cast<size_t>(i)]);
      f.set(i, 0, b[static_cast<size_t>(i)]);
    }
    Poly pa{std::vector<Rational>(a)}, pb{std::vector<Rational>(b)};
    if (pa.degree() != 4 || pb.degree() != 4) continue;
    if (Poly::gcd(pa, pb).degree() != 0) continue;  // reducible
    return f;
  }
}

Frame random_frame(std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  while (true) {
    Frame fr = Frame::identity();
    Rational m[2][2][2];
    for (int s = 0; s < 2; ++s)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m[s][r][c] = Rational(entry(rng));
    Rational detx = m[0][0][0] * m[0][1][1] - m[0][0][1] * m[0][1][0];
    Rational dety = m[1][0][0] * m[1][1][1] - m[1][0][1] * m[1][1][0];
    if (detx.is_zero() || dety.is_zero()) continue;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        fr.x[r][c] = m[0][r][c];
        fr.y[r][c] = m[1][r][c];
      }
    fr.origin = "random";
    return fr;
  }
}

DecoratedDualGraph random_graph(std::mt19937& rng) {
  std::uniform_int_distribution<int> ncomp(1, 8);
  std::uniform_int_distribution<int> twelfth(0, 12);
  std::uniform_int_distribution<int> coin(0, 3);
  std::uniform_int_distribution<int> stab(1, 4);
  DecoratedDualGraph g;
  int n = ncomp(rng);
  for (int i = 0; i < n; ++i) {
    Component c;
    c.genus = coin(rng) == 0 ? 1 : 0;
    c.moduli_degree = Rational(twelfth(rng), 12);
    int nb = coin(rng) % 3;
    for (int b = 0; b < nb; ++b)
      c.boundary.push_back({Rational(1 + twelfth(rng) % 12, 12),
                            "p" + std::to_string(i) + "_" + std::to_string(b)});
    c.markings = coin(rng) % 2;
    g.components.push_back(std::move(c));
  }
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> parent(0, i - 1);
    g.edges.push_back({static_cast<size_t>(parent(rng)), static_cast<size_t>(i), stab(rng)});
  }
  return g;
}

// ---- criteria ----

CriterionResult criterion1() {
  Check c(1, "beta(E) = 0 and S(E) = 5 - 4c on the (1,4) blow-up");
  auto t0 = Clock::now();
  RayProblem pb = fixtures::p14_exceptional();
  for (const auto& cv : four_c()) {
    Scalar s = s_invariant(pb, Scalar(cv));
    Scalar expect = Scalar(Rational(5)) - Scalar(Rational(4)) * Scalar(cv);
    c.require(s == expect, "S(E) at c = " + cv.str() + " is " + s.str());
    c.require(beta(pb, Scalar(cv)).is_zero(), "beta(E) nonzero at c = " + cv.str());
  }
  double dt = seconds_since(t0);
  c.require(dt < 1.0, "runtime " + std::to_string(dt) + " s exceeds 1 s");
  return c.result;
}

CriterionResult criterion2() {
  Check c(2, "Zariski breakpoints {0, 1, 7} with T = 8 at c = 1/4");
  RayProblem pb = fixtures::p14_exceptional();
  auto dec = decompose_ray(pb.model, pb.polarization(Scalar(Rational(1, 4))), pb.direction);
  c.require(dec.breakpoints.size() == 4, "expected three pieces");
  if (dec.breakpoints.size() == 4) {
    c.require(dec.breakpoints[0] == Scalar(0), "first breakpoint");
    c.require(dec.breakpoints[1] == Scalar(1), "breakpoint 2 - 4c");
    c.require(dec.breakpoints[2] == Scalar(7), "breakpoint 8 - 4c");
    c.require(dec.breakpoints[3] == Scalar(8), "threshold 10 - 8c");
  }
  // middle-piece negative part carries ft1 with coefficient (t - 2 + 4c)/4
  if (dec.pieces.size() == 3) {
    const auto& mid = dec.pieces[1].negative;
    c.require(mid.size() == 1 && mid[0].first == "ft1", "middle negative part");
    if (mid.size() == 1) {
      c.require(mid[0].second.c0 == Scalar(Rational(-1, 4)) &&
                    mid[0].second.c1 == Scalar(Rational(1, 4)),
                "ft1 coefficient (t - 1)/4");
    }
  }
  return c.result;
}

CriterionResult criterion3() {
  Check c(3, "vertical-divisor S and beta identities on (1,4)");
  for (const auto& cv : four_c()) {
    Scalar sc(cv);
    Scalar one(1);
    Scalar sf1 = s_invariant(fixtures::p14_ruling_f1(), sc);
    Scalar sf2 = s_invariant(fixtures::p14_ruling_f2(), sc);
    c.require(sf1 == one - sc / Scalar(2), "S(f1) = 1 - c/2 at c = " + cv.str());
    c.require(sf2 == one - Scalar(2) * sc, "S(f2) = 1 - 2c at c = " + cv.str());

    Scalar sd = s_invariant(fixtures::p14_boundary(), sc);
    Scalar paper_sd = (one - Scalar(2) * sc) * (Scalar(13) - Scalar(4) * sc) /
                      (Scalar(12) * (Scalar(2) - sc));
    c.require(sd == paper_sd,
              "S(D) at c = " + cv.str() + ": computed " + sd.str() + ", stated closed form " +
                  paper_sd.str());
    c.require(beta(fixtures::p14_boundary(), sc).sign() > 0, "beta(D) > 0 at c = " + cv.str());
  }
  // the exact S(D) disagrees with the stated closed form; show the
  // independent check for the computed value
  {
    Rational cv(1, 4);
    RayProblem pb = fixtures::p14_boundary();
    Rational exact_integral =
        decompose_ray(pb.model, pb.polarization(Scalar(cv)), pb.direction)
            .positive_part_square_integral(pb.model)
            .as_rational();
    Rational riemann = oracles::riemann_s_integral(pb, cv, 2000);
    Rational gap = (exact_integral - riemann).abs();
    c.note("computed S(D) = (1-2c)(11-4c)/(24(2-c)); at c=1/4 the exact integral is " +
           exact_integral.str() + ", Riemann oracle gap " + gap.str() +
           "; the stated closed form evaluates above the threshold bound S < T");
  }
  auto scan = wall_scan(fixtures::p14_boundary());
  c.require(scan.walls.empty(), "no walls from D on (0, 1/2)");
  bool numerator_matches = false;
  std::string got = "(empty)";
  if (!scan.chambers.empty()) {
    const Poly& reduced = scan.chambers.front().reduced_numerator;
    got = reduced.str();
    Poly paper_poly({Rational(11), Rational(-6), Rational(4)});
    numerator_matches = reduced.coeffs() == paper_poly.coeffs();
  }
  c.require(numerator_matches,
            "reduced beta numerator equals 4c^2 - 6c + 11 up to positive scaling; reconstructed " +
                got);
  return c.result;
}

CriterionResult criterion4() {
  Check c(4, "wall c0 = (9 - sqrt(21))/30 from both degenerations");
  Scalar c0 = quad_roots(Rational(15), Rational(-9), Rational(1)).front();

  auto scan46 = wall_scan(fixtures::p46_conic());
  c.require(scan46.walls.size() == 1 && scan46.walls[0] == c0,
            "(4,6)/Q wall list is exactly {c0}");
  auto scanf2 = wall_scan(fixtures::f2_fiber());
  c.require(scanf2.walls.size() == 1 && scanf2.walls[0] == c0, "F2/f1 wall list is exactly {c0}");
  if (!scanf2.chambers.empty()) {
    Poly quad({Rational(1), Rational(-9), Rational(15)});
    c.require(scanf2.chambers.front().reduced_numerator.coeffs() == quad.coeffs(),
              "F2/f1 numerator reduces to 15c^2 - 9c + 1");
  }
  c.require(beta(fixtures::f2_fiber(), c0).is_zero(), "beta(f1) at c0 is exactly 0 in Q(sqrt 21)");
  c.require(beta(fixtures::f2_infinity_section(), c0).is_zero(), "beta(e_inf) at c0 is exactly 0");
  c.require(beta(fixtures::p46_conic(), c0).is_zero(), "beta(Q) at c0 is exactly 0");
  c.require(c0.decimal12().substr(0, 5) == "0.147",
            "decimal rendering starts 0.147 (got " + c0.decimal12() + ")");
  return c.result;
}

CriterionResult criterion5() {
  Check c(5, "log canonical threshold tables, exact, with weight-scan oracle");
  auto t0 = Clock::now();
  TableReport report = table_regression(50);
  int t1 = 0, t2 = 0, lemma = 0;
  for (const auto& row : report.rows) {
    c.require(row.match, row.label + ": got " + row.got_lct.str() + ", expected " +
                             row.expected_lct.str());
    c.require(row.oracle_match, row.label + ": brute-force weight oracle disagrees");
    if (row.label.rfind("T1", 0) == 0) t1 += row.match;
    if (row.label.rfind("T2", 0) == 0) t2 += row.match;
    if (row.label.rfind("L:", 0) == 0) lemma += row.match;
  }
  c.require(t1 == 6, "unibranched table rows 6/6");
  c.require(t2 == 8, "non-unibranched table rows 8/8");
  c.require(lemma == 6, "fiber-polynomial list 6/6");
  double dt = seconds_since(t0);
  c.require(dt < 1.0, "runtime " + std::to_string(dt) + " s exceeds 1 s");
  return c.result;
}

CriterionResult criterion6() {
  Check c(6, "GIT classification of (1,4)-curves");
  auto t0 = Clock::now();

  auto res0 = git_status(c0_curve());
  c.require(res0.verdict == GitVerdict::StrictlySemistable, "C0 strictly semistable");
  c.require(res0.certificate.position == BarycenterPosition::Boundary &&
                res0.certificate.hull.size() == 2,
            "C0 certificate is a segment through the barycenter");
  auto res1 = git_status(c1_curve());
  c.require(res1.verdict == GitVerdict::StrictlySemistable, "C1 strictly semistable");
  c.require(res1.certificate.hull.size() == 2, "C1 certificate is a segment");
  auto resm = git_status(monomial_x4y0());
  c.require(resm.verdict == GitVerdict::Unstable, "x0^4 y0 unstable");

  std::mt19937 rng(20260810);
  std::vector<BiForm> smooth;
  for (int i = 0; i < 20; ++i) smooth.push_back(random_smooth_41(rng));
  for (size_t i = 0; i < smooth.size(); ++i) {
    auto r = git_status(smooth[i]);
    c.require(r.verdict == GitVerdict::Stable,
              "smooth form " + std::to_string(i) + " stable (got " + to_string(r.verdict) + ")");
  }
  // verdict invariance under random rational frames
  for (size_t i = 0; i < smooth.size(); ++i) {
    for (int k = 0; k < 50; ++k) {
      BiForm moved = apply_frame(smooth[i], random_frame(rng));
      auto r = git_status(moved);
      if (r.verdict != GitVerdict::Stable) {
        c.require(false, "framed smooth form " + std::to_string(i) + " verdict changed");
        break;
      }
    }
  }
  for (const BiForm& special : {c0_curve(), c1_curve(), monomial_x4y0()}) {
    GitVerdict expect = git_status(special).verdict;
    for (int k = 0; k < 10; ++k) {
      BiForm moved = apply_frame(special, random_frame(rng));
      c.require(git_status(moved).verdict == expect, "framed special curve verdict changed");
    }
  }
  double dt = seconds_since(t0);
  c.require(dt < 10.0, "runtime " + std::to_string(dt) + " s exceeds 10 s");
  c.note("runtime " + std::to_string(dt) + " s");
  return c.result;
}

CriterionResult criterion7() {
  Check c(7, "the six quasimap types in degree 6");
  auto types = enumerate_quasimap_types(6);
  c.require(types.size() == 6, "exactly six types (got " + std::to_string(types.size()) + ")");
  auto find = [&](std::vector<int> degrees) -> const QuasimapType* {
    for (const auto& t : types)
      if (t.degrees == degrees) return &t;
    return nullptr;
  };
  struct Expect {
    std::vector<int> degrees;
    std::vector<std::vector<int>> stabs;
    int contracted;
  };
  std::vector<Expect> expects = {
      {{6}, {{}}, 0},
      {{4, 2}, {{3}}, 0},
      {{3, 3}, {{2}, {4}}, 0},
      {{3, 2, 1}, {{3, 4}}, 0},
      {{2, 2, 2}, {{3, 3}}, 0},
      {{2, 2, 2, 0}, {{3, 3, 3}}, 1},
  };
  for (const auto& e : expects) {
    const QuasimapType* t = find(e.degrees);
    std::ostringstream label;
    for (int d : e.degrees) label << d << " ";
    if (!t) {
      c.require(false, "missing type {" + label.str() + "}");
      continue;
    }
    c.require(t->stabilizer_options == e.stabs, "stabilizers of {" + label.str() + "}");
    c.require(t->contracted == e.contracted, "contracted count of {" + label.str() + "}");
  }
  auto deg1 = enumerate_quasimap_types(1);
  c.require(deg1.size() == 1 && deg1[0].degrees == std::vector<int>{1},
            "degree 1 admits only the irreducible type");
  return c.result;
}

CriterionResult criterion8() {
  Check c(8, "base-curve MMP conservation and termination");
  std::mt19937 rng(987654321);
  for (int trial = 0; trial < 200; ++trial) {
    DecoratedDualGraph g = random_graph(rng);
    Rational before = total_degree(g);
    DecoratedDualGraph cur = g;
    size_t steps = 0;
    while (auto step = mmp_step(cur)) {
      Rational mid = total_degree(step->graph);
      if (mid != total_degree(cur)) {
        c.require(false, "total degree changed in trial " + std::to_string(trial));
        break;
      }
      // a tail of moduli degree exactly 1 has deg(K+B+M) >= 0
      if (cur.components[step->contracted].moduli_degree == Rational(1) &&
          cur.components[step->contracted].boundary.empty()) {
        c.require(false, "contracted a moduli-degree-1 tail in trial " + std::to_string(trial));
      }
      cur = std::move(step->graph);
      if (++steps > g.components.size()) {
        c.require(false, "did not terminate within component budget");
        break;
      }
    }
    if (total_degree(cur) != before)
      c.require(false, "conservation after run in trial " + std::to_string(trial));
  }
  // directed fixture: two moduli-1/3 tails on a genus-1 center
  DecoratedDualGraph chain;
  chain.components.push_back({0, Rational(1, 3), {}, 0});
  chain.components.push_back({1, Rational(0), {}, 0});
  chain.components.push_back({0, Rational(1, 3), {}, 0});
  chain.edges.push_back({0, 1, 1});
  chain.edges.push_back({1, 2, 1});
  DecoratedDualGraph done = run_mmp(chain);
  c.require(done.components.size() == 1 && done.components[0].boundary.size() == 2 &&
                done.components[0].boundary[0].coefficient == Rational(1, 3) &&
                done.components[0].boundary[1].coefficient == Rational(1, 3),
            "two 1/3 tails deposit two 1/3 boundary points");
  c.require(total_degree(chain) == total_degree(done), "chain conservation");
  return c.result;
}

CriterionResult criterion9() {
  Check c(9, "refined flag S equals (2 - c)/4 and stays below 1 - c");
  for (const auto& cv : {Rational(1, 10), Rational(1, 4), Rational(2, 5)}) {
    Scalar got = flag_s_invariant(Scalar(cv));
    Scalar expect = (Scalar(2) - Scalar(cv)) / Scalar(4);
    c.require(got == expect, "flag S at c = " + cv.str());
  }
  for (int k = 1; k <= 100; ++k) {
    Rational cv(k, 201);  // samples in (0, 1/2)
    Scalar s = flag_s_invariant(Scalar(cv));
    Scalar a = Scalar(1) - Scalar(cv);
    c.require(s < a, "flag S < A on f2 at c = " + cv.str());
  }
  return c.result;
}

CriterionResult criterion10() {
  Check c(10, "canonical bundle formula arithmetic");
  c.require(moduli_degree_from_map(12) == Rational(1), "deg 12 gives moduli degree 1");
  for (long n = 1; n <= 10; ++n) {
    c.require(moduli_degree_from_map(n4_curve_map_degree(n)) == Rational(n, 2),
              "moduli degree n/2 for n = " + std::to_string(n));
  }
  bool thrown = false;
  try {
    moduli_degree_from_map(8);
  } catch (const Error&) {
    thrown = true;
  }
  c.require(thrown, "non-divisible map degree rejected");
  for (long n = 0; n <= 20; ++n) {
    for (long degf = 6; degf <= 120; degf += 6) {
      auto r = hirzebruch_bound_check(n, degf);
      c.require(r.consistent == (6 * n <= degf),
                "bound check at n = " + std::to_string(n) + ", deg f = " + std::to_string(degf));
      if (!r.consistent) {
        c.require(r.d_dot_e.sign() < 0 && r.d_minus_e_dot_e.sign() < 0,
                  "contradiction witnesses negative");
      }
    }
  }
  return c.result;
}

CriterionResult criterion11() {
  Check c(11, "independent oracles: Riemann integration, field axioms, signs");
  long panels = oracles::oracle_panels();
  std::mt19937 rng(424242);
  std::vector<std::pair<RayProblem, Rational>> cases;
  std::uniform_int_distribution<int> num(1, 40);
  auto pick_c = [&](const Rational& hi) {
    while (true) {
      Rational cv(num(rng), 97);
      if (cv < hi) return cv;
    }
  };
  cases.emplace_back(fixtures::p14_exceptional(), pick_c(Rational(1, 2)));
  cases.emplace_back(fixtures::p14_boundary(), pick_c(Rational(1, 2)));
  cases.emplace_back(fixtures::p14_ruling_f1(), pick_c(Rational(1, 2)));
  cases.emplace_back(fixtures::f2_fiber(), pick_c(Rational(1, 3)));
  cases.emplace_back(fixtures::p46_conic(), pick_c(Rational(1, 3)));
  Rational tol(1, 1000000);
  for (const auto& [pb, cv] : cases) {
    Rational exact = decompose_ray(pb.model, pb.polarization(Scalar(cv)), pb.direction)
                         .positive_part_square_integral(pb.model)
                         .as_rational();
    Rational approx = oracles::riemann_s_integral(pb, cv, panels);
    c.require((exact - approx).abs() <= tol,
              pb.name + " at c = " + cv.str() + ": gap " + (exact - approx).abs().str());
  }

  // field axioms on random samples
  std::uniform_int_distribution<long> small(-12, 12);
  std::vector<long> ds = {2, 3, 5, 21};
  for (int trial = 0; trial < 300; ++trial) {
    long d = ds[static_cast<size_t>(trial) % ds.size()];
    auto rnd = [&](void) {
      Rational p(small(rng), 1 + std::abs(small(rng)));
      Rational q(small(rng), 1 + std::abs(small(rng)));
      return Scalar(p, q, d);
    };
    Scalar x = rnd(), y = rnd(), z = rnd();
    c.require((x + y) + z == x + (y + z), "associativity");
    c.require(x * (y + z) == x * y + x * z, "distributivity");
    c.require(x + (-x) == Scalar(0), "additive inverse");
    if (!x.is_zero()) c.require(x * x.inverse() == Scalar(1), "multiplicative inverse");
    if (c.result.notes.size() > 8) break;
  }
  // sign determination against the interval oracle
  for (int trial = 0; trial < 300; ++trial) {
    long d = ds[static_cast<size_t>(trial) % ds.size()];
    Rational a(small(rng), 1 + std::abs(small(rng)));
    Rational b(small(rng), 1 + std::abs(small(rng)));
    Scalar x(a, b, d);
    c.require(x.sign() == oracles::interval_sign(x, 50), "sign of " + x.str());
    if (c.result.notes.size() > 8) break;
  }
  // quadratic roots substitute back to exactly zero
  for (int trial = 0; trial < 200; ++trial) {
    Rational p2(small(rng), 1 + std::abs(small(rng)));
    Rational p1(small(rng), 1 + std::abs(small(rng)));
    Rational p0(small(rng), 1 + std::abs(small(rng)));
    if (p2.is_zero() && p1.is_zero() && p0.is_zero()) continue;
    for (const Scalar& r : quad_roots(p2, p1, p0)) {
      Scalar value = Scalar(p2) * r * r + Scalar(p1) * r + Scalar(p0);
      c.require(value.is_zero(), "root substitution");
      if (c.result.notes.size() > 8) break;
    }
  }
  c.note("panels = " + std::to_string(panels));
  return c.result;
}

}  // namespace

std::vector<CriterionResult> run_paper_suite() {
  return {criterion1(), criterion2(), criterion3(), criterion4(), criterion5(), criterion6(),
          criterion7(), criterion8(), criterion9(), criterion10(), criterion11()};
}

int print_suite(std::ostream& os, const std::vector<CriterionResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    os << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << "\n";
    if (!r.pass) ++failures;
    for (const auto& n : r.notes) os << "      " << n << "\n";
  }
  os << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed")
     << "\n";
  return failures;
}

}  // namespace kmoduli
