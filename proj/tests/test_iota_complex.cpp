#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ihf/errors.hpp"
#include "ihf/iota.hpp"
#include "ihf/presets.hpp"
#include "testutil.hpp"

using namespace ihf;

TEST_CASE("all built-in models satisfy the axioms") {
  for (const auto& name : preset_names()) {
    auto x = preset(name);
    auto rep = validate_iota(x);
    CHECK_MESSAGE(rep.ok(), name);
    REQUIRE(rep.square_witness.has_value());
    // The witness really solves dH + Hd = iota^2 + id.
    MonoMatrix lhs = add(compose(x.complex.diff, *rep.square_witness),
                         compose(*rep.square_witness, x.complex.diff));
    MonoMatrix rhs = add(compose(x.iota, x.iota),
                         MonoMatrix::identity(x.complex.gens));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("random axiom-true involutive models validate") {
  testutil::Rng rng(0x107A01);
  for (int trial = 0; trial < 40; ++trial) {
    auto x = testutil::random_iota(rng, (int)testutil::pick(rng, 0, 3),
                                   Grading(testutil::pick(rng, -1, 1)), 20);
    auto rep = validate_iota(x);
    CHECK_MESSAGE(rep.ok(), "trial " << trial);
  }
}

TEST_CASE("involution that fails to commute with d is rejected") {
  // Two pairs d(a) = b (grading 0 arrows) and two cycles; iota swaps a pair
  // generator with a cycle of the same grading, breaking commutation.
  Basis b;
  b.add("a", Grading(0));
  b.add("b", Grading(-1));
  b.add("c", Grading(0));
  b.add("d", Grading(-1));
  b.add("x", Grading(0));
  MonoMatrix diff(b, b, Grading(1));
  diff.toggle(1, 0);
  MonoMatrix iota(b, b, Grading(0));
  iota.toggle(2, 0);  // a -> c
  iota.toggle(0, 2);  // c -> a
  iota.toggle(3, 1);  // b -> d
  iota.toggle(1, 3);  // d -> b
  iota.toggle(4, 4);
  IotaComplex x(GradedComplex(std::move(b), std::move(diff)),
                std::move(iota));
  auto rep = validate_iota(x);
  CHECK_FALSE(rep.ok());
  bool mentions = false;
  for (const auto& v : rep.violations)
    mentions |= v.find("commute") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("involution whose square is not homotopic to id is rejected") {
  // Three identical torsion pairs cycled by iota: iota^2 is the inverse
  // 3-cycle, which permutes homology summands nontrivially.
  Basis b;
  for (int p = 0; p < 3; ++p) {
    b.add("a" + std::to_string(p), Grading(0));
    b.add("b" + std::to_string(p), Grading(1));
  }
  b.add("x", Grading(0));
  MonoMatrix diff(b, b, Grading(1));
  for (int p = 0; p < 3; ++p) diff.toggle(2 * p + 1, 2 * p);
  MonoMatrix iota(b, b, Grading(0));
  for (int off : {0, 1}) {
    iota.toggle(2 + off, 0 + off);  // pair 0 -> pair 1
    iota.toggle(4 + off, 2 + off);  // pair 1 -> pair 2
    iota.toggle(0 + off, 4 + off);  // pair 2 -> pair 0
  }
  iota.toggle(6, 6);
  IotaComplex x(GradedComplex(std::move(b), std::move(diff)),
                std::move(iota));
  auto rep = validate_iota(x);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.square_witness.has_value());
  bool mentions = false;
  for (const auto& v : rep.violations)
    mentions |= v.find("homotopic to the identity") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("homology that does not localize to one tower is rejected") {
  Basis b;
  b.add("x", Grading(0));
  b.add("y", Grading(0));
  MonoMatrix diff(b, b, Grading(1));
  MonoMatrix iota = MonoMatrix::identity(b);
  IotaComplex x(GradedComplex(std::move(b), std::move(diff)),
                std::move(iota));
  auto rep = validate_iota(x);
  CHECK_FALSE(rep.ok());
  bool mentions = false;
  for (const auto& v : rep.violations)
    mentions |= v.find("tower") != std::string::npos;
  CHECK(mentions);
}

TEST_CASE("product gradings, names, and the unit") {
  auto s = preset("sigma_2_3_7");
  auto e = preset("unit");
  auto p = tensor(e, s);
  REQUIRE(p.complex.gens.size() == 3);
  // Names combine as left|right; gradings add with a +2 shift, so the
  // single generator at -2 is neutral.
  CHECK(p.complex.gens.name(0) == "e|a");
  CHECK(p.complex.gens.grading(p.complex.gens.index("e|a")) == Grading(-2));
  CHECK(p.complex.gens.grading(p.complex.gens.index("e|c")) == Grading(-3));
  CHECK(validate_iota(p).ok());
  // Same differential pattern as the bare model.
  auto es = p.complex.diff.entries();
  REQUIRE(es.size() == 2);
  CHECK(es[0].exponent == 1);

  auto q = tensor(s, e);
  CHECK(q.complex.gens.name(0) == "a|e");
  CHECK(validate_iota(q).ok());
}

TEST_CASE("product of the three-generator model with itself") {
  auto s = preset("sigma_2_3_7");
  auto p = tensor(s, s);
  REQUIRE(p.complex.gens.size() == 9);
  CHECK(validate_iota(p).ok());
  // gr(c|c) = -3 + -3 + 2 = -4.
  CHECK(p.complex.gens.grading(p.complex.gens.index("c|c")) == Grading(-4));
  auto h = homology(p.complex);
  REQUIRE(h.towers.size() == 1);
  CHECK(h.towers[0].top == Grading(-2));
  std::vector<std::pair<Grading, int>> parts;
  for (const auto& t : h.torsion) parts.push_back({t.top, t.order});
  std::sort(parts.begin(), parts.end());
  CHECK(parts == std::vector<std::pair<Grading, int>>{
                     {Grading(-3), 1}, {Grading(-2), 1}, {Grading(-2), 1},
                     {Grading(-2), 1}});
}

TEST_CASE("product respects the axioms on random pairs") {
  testutil::Rng rng(0x107A02);
  for (int trial = 0; trial < 15; ++trial) {
    auto x = testutil::random_iota(rng, 2, Grading(0), 12);
    auto y = testutil::random_iota(rng, 1, Grading(testutil::pick(rng, 0, 1)),
                                   12);
    auto p = tensor(x, y);
    CHECK(p.complex.gens.size() ==
          x.complex.gens.size() * y.complex.gens.size());
    CHECK_MESSAGE(validate_iota(p).ok(), "trial " << trial);
  }
}

TEST_CASE("orientation reversal: gradings reflect about -2") {
  auto s = preset("sigma_2_3_7");
  auto d = dual(s);
  // gr(x*) = -gr(x) - 4: a, b stay at -2, c moves to -1.
  CHECK(d.complex.gens.grading(d.complex.gens.index("a")) == Grading(-2));
  CHECK(d.complex.gens.grading(d.complex.gens.index("c")) == Grading(-1));
  CHECK(validate_iota(d).ok());
  // The differential transposes with the same exponents: d(c) = U(a+b)
  // becomes d(a*) = U c*, d(b*) = U c*.
  auto es = d.complex.diff.entries();
  REQUIRE(es.size() == 2);
  for (const auto& e : es) {
    CHECK(d.complex.gens.name(e.row) == "c");
    CHECK(e.exponent == 1);
  }
}

TEST_CASE("orientation reversal is an involution fixing the unit") {
  auto e = preset("unit");
  auto de = dual(e);
  CHECK(de.complex.gens.size() == 1);
  CHECK(de.complex.gens.name(0) == "e");
  CHECK(de.complex.gens.grading(0) == Grading(-2));
  CHECK(de.complex.diff == e.complex.diff);
  CHECK(de.iota == e.iota);

  for (const auto& name : preset_names()) {
    auto x = preset(name);
    auto dd = dual(dual(x));
    CHECK(dd.complex.gens.size() == x.complex.gens.size());
    for (int i = 0; i < x.complex.gens.size(); ++i) {
      CHECK(dd.complex.gens.name(i) == x.complex.gens.name(i));
      CHECK(dd.complex.gens.grading(i) == x.complex.gens.grading(i));
    }
    CHECK(dd.complex.diff == x.complex.diff);
    CHECK(dd.iota == x.iota);
    CHECK(validate_iota(dual(x)).ok());
  }
}

TEST_CASE("orientation reversal on random models") {
  testutil::Rng rng(0x107A03);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = testutil::random_iota(rng, 2, Grading(0), 15);
    auto d = dual(x);
    CHECK(validate_iota(d).ok());
    auto dd = dual(d);
    CHECK(dd.complex.diff == x.complex.diff);
    CHECK(dd.iota == x.iota);
  }
}

TEST_CASE("product involution correction term is null-homotopic") {
  // For every pair of built-in models the correction U*(Phi iota (x) Phi
  // iota) on the product bounds, and the returned witness verifies.
  auto names = preset_names();
  for (const auto& nx : names) {
    for (const auto& ny : names) {
      auto x = preset(nx);
      auto y = preset(ny);
      MonoMatrix h = check_phi_correction(x, y);
      auto p = tensor(x, y);
      MonoMatrix fx = compose(phi(x.complex), x.iota);
      MonoMatrix fy = compose(phi(y.complex), y.iota);
      MonoMatrix target =
          tensor_map(fx, fy, p.complex.gens).u_times(1);
      MonoMatrix rebuilt =
          add(compose(p.complex.diff, h), compose(h, p.complex.diff));
      CHECK_MESSAGE(rebuilt == target, nx << " (x) " << ny);
    }
  }
}
