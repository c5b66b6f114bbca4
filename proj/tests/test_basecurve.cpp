#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kmoduli/basecurve.hpp"

using namespace kmoduli;

namespace {
Component comp(long genus, Rational moduli, std::vector<Rational> boundary = {}) {
  Component c;
  c.genus = genus;
  c.moduli_degree = std::move(moduli);
  for (size_t i = 0; i < boundary.size(); ++i)
    c.boundary.push_back({boundary[i], "b" + std::to_string(i)});
  return c;
}
}  // namespace

TEST_CASE("quasimap types in degree six") {
  auto types = enumerate_quasimap_types(6);
  REQUIRE(types.size() == 6);

  auto find = [&](std::vector<int> degrees) -> const QuasimapType* {
    for (const auto& t : types)
      if (t.degrees == degrees) return &t;
    return nullptr;
  };

  const auto* full = find({6});
  REQUIRE(full != nullptr);
  CHECK(full->stabilizer_options == std::vector<std::vector<int>>{{}});

  const auto* t42 = find({4, 2});
  REQUIRE(t42 != nullptr);
  CHECK(t42->stabilizer_options == std::vector<std::vector<int>>{{3}});

  const auto* t33 = find({3, 3});
  REQUIRE(t33 != nullptr);
  CHECK(t33->stabilizer_options == std::vector<std::vector<int>>{{2}, {4}});

  const auto* t321 = find({3, 2, 1});
  REQUIRE(t321 != nullptr);
  CHECK(t321->stabilizer_options == std::vector<std::vector<int>>{{3, 4}});
  CHECK(t321->contracted == 0);

  const auto* t222 = find({2, 2, 2});
  REQUIRE(t222 != nullptr);
  CHECK(t222->stabilizer_options == std::vector<std::vector<int>>{{3, 3}});

  const auto* t2220 = find({2, 2, 2, 0});
  REQUIRE(t2220 != nullptr);
  CHECK(t2220->stabilizer_options == std::vector<std::vector<int>>{{3, 3, 3}});
  CHECK(t2220->contracted == 1);
}

TEST_CASE("degree one admits only the irreducible type") {
  auto types = enumerate_quasimap_types(1);
  REQUIRE(types.size() == 1);
  CHECK(types[0].degrees == std::vector<int>{1});
  CHECK_THROWS_AS(enumerate_quasimap_types(0), Error);
}

TEST_CASE("single mmp step") {
  // tail: moduli 1/2, one edge: deg = -2 + 1 + 1/2 < 0, contract
  DecoratedDualGraph g;
  g.components.push_back(comp(0, Rational(1, 2)));
  g.components.push_back(comp(1, Rational(0)));
  g.edges.push_back({0, 1, 1});
  auto step = mmp_step(g);
  REQUIRE(step.has_value());
  CHECK(step->contracted == 0);
  CHECK(step->deposited == Rational(1, 2));
  REQUIRE(step->graph.components.size() == 1);
  REQUIRE(step->graph.components[0].boundary.size() == 1);
  CHECK(step->graph.components[0].boundary[0].coefficient == Rational(1, 2));
  CHECK(total_degree(g) == total_degree(step->graph));
}

TEST_CASE("moduli degree one tails are minimal") {
  DecoratedDualGraph g;
  g.components.push_back(comp(0, Rational(1)));
  g.components.push_back(comp(0, Rational(1)));
  g.edges.push_back({0, 1, 1});
  CHECK_FALSE(mmp_step(g).has_value());
  DecoratedDualGraph done = run_mmp(g);
  CHECK(done.components.size() == 2);
}

TEST_CASE("tie break picks the most negative tail, then the lowest id") {
  DecoratedDualGraph g;
  g.components.push_back(comp(0, Rational(1, 2)));   // deg -1/2
  g.components.push_back(comp(0, Rational(0)));      // center
  g.components.push_back(comp(0, Rational(1, 12)));  // deg -11/12, more negative
  g.edges.push_back({0, 1, 1});
  g.edges.push_back({1, 2, 1});
  auto step = mmp_step(g);
  REQUIRE(step.has_value());
  CHECK(step->contracted == 2);

  DecoratedDualGraph tie;
  tie.components.push_back(comp(0, Rational(1, 3)));
  tie.components.push_back(comp(1, Rational(0)));
  tie.components.push_back(comp(0, Rational(1, 3)));
  tie.edges.push_back({0, 1, 1});
  tie.edges.push_back({1, 2, 1});
  auto tstep = mmp_step(tie);
  REQUIRE(tstep.has_value());
  CHECK(tstep->contracted == 0);
}

TEST_CASE("full mmp run on a two-tail chain") {
  DecoratedDualGraph g;
  g.components.push_back(comp(0, Rational(1, 3)));
  g.components.push_back(comp(1, Rational(0)));
  g.components.push_back(comp(0, Rational(1, 3)));
  g.edges.push_back({0, 1, 1});
  g.edges.push_back({1, 2, 1});
  Rational before = total_degree(g);
  DecoratedDualGraph done = run_mmp(g);
  REQUIRE(done.components.size() == 1);
  CHECK(done.components[0].boundary.size() == 2);
  CHECK(total_degree(done) == before);
  for (size_t i = 0; i < done.components.size(); ++i)
    CHECK(done.adjusted_degree(i).sign() >= 0);

  DecoratedDualGraph single;
  single.components.push_back(comp(0, Rational(1, 4)));
  CHECK(run_mmp(single).components.size() == 1);
}

TEST_CASE("boundary mass travels with the tail") {
  DecoratedDualGraph g;
  g.components.push_back(comp(0, Rational(1, 12), {Rational(1, 4)}));
  g.components.push_back(comp(0, Rational(1)));
  g.edges.push_back({0, 1, 2});
  auto step = mmp_step(g);
  REQUIRE(step.has_value());
  CHECK(step->deposited == Rational(1, 12) + Rational(1, 4));
}

TEST_CASE("conservation and termination on random graphs") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> ncomp(1, 8);
  std::uniform_int_distribution<int> twelfth(0, 12);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    DecoratedDualGraph g;
    int n = ncomp(rng);
    for (int i = 0; i < n; ++i) {
      Component c;
      c.genus = pick(rng) == 0 ? 1 : 0;
      c.moduli_degree = Rational(twelfth(rng), 12);
      if (pick(rng) == 0) c.boundary.push_back({Rational(1 + twelfth(rng) % 12, 12), "p"});
      g.components.push_back(std::move(c));
    }
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> parent(0, i - 1);
      g.edges.push_back({static_cast<size_t>(parent(rng)), static_cast<size_t>(i), 1});
    }
    Rational before = total_degree(g);
    size_t steps = 0;
    DecoratedDualGraph cur = g;
    while (auto step = mmp_step(cur)) {
      CHECK(total_degree(step->graph) == total_degree(cur));
      cur = std::move(step->graph);
      REQUIRE(++steps <= g.components.size());
    }
    CHECK(total_degree(cur) == before);
    for (size_t i = 0; i < cur.components.size(); ++i) {
      if (cur.components[i].genus == 0 && cur.valence(i) == 1)
        CHECK(cur.adjusted_degree(i).sign() >= 0);
    }
  }
}

TEST_CASE("validation") {
  DecoratedDualGraph g;
  g.components.push_back(comp(0, Rational(1, 7)));
  auto warnings = g.validate();
  REQUIRE(warnings.size() == 1);

  DecoratedDualGraph disconnected;
  disconnected.components.push_back(comp(0, Rational(0)));
  disconnected.components.push_back(comp(0, Rational(0)));
  CHECK_THROWS_WITH_AS(mmp_step(disconnected), doctest::Contains("disconnected"), Error);

  DecoratedDualGraph bad;
  bad.components.push_back(comp(0, Rational(0), {Rational(3, 2)}));
  CHECK_THROWS_AS(bad.validate(), Error);
}
