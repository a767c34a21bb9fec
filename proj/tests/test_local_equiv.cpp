#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ihf/involutive.hpp"
#include "ihf/local_equiv.hpp"
#include "ihf/presets.hpp"
#include "testutil.hpp"

using namespace ihf;

namespace {

// Re-verify a witness from scratch: chain map, homotopy equation, and a
// localized-homology isomorphism.
void verify_witness(const IotaComplex& x, const IotaComplex& y,
                    const LocalMapWitness& w) {
  CHECK(w.f.delta() == Grading(0));
  CHECK(is_chain_map(x.complex, y.complex, w.f));
  MonoMatrix lhs = add(compose(w.f, x.iota), compose(y.iota, w.f));
  MonoMatrix rhs = add(compose(y.complex.diff, w.h),
                       compose(w.h, x.complex.diff));
  CHECK(lhs == rhs);
  auto hx = homology(x.complex);
  auto hy = homology(y.complex);
  REQUIRE(hx.towers.size() == 1);
  REQUIRE(hy.towers.size() == 1);
  long long n = std::max(hx.max_torsion_order(), hy.max_torsion_order()) + 1;
  CHECK(tower_coefficient(hy, w.f.apply(hx.towers[0].rep), n));
}

bool both_ways(const IotaComplex& x, const IotaComplex& y) {
  return find_local_map(x, y).has_value() &&
         find_local_map(y, x).has_value();
}

}  // namespace

TEST_CASE("every model is locally equivalent to itself") {
  for (const auto& name : preset_names()) {
    auto x = preset(name);
    auto w = find_local_map(x, x);
    REQUIRE_MESSAGE(w.has_value(), name);
    verify_witness(x, x, *w);
  }
}

TEST_CASE("the three-generator model maps to the unit but not back") {
  auto s = preset("sigma_2_3_7");
  auto e = group_unit();
  auto down = find_local_map(s, e);
  REQUIRE(down.has_value());
  verify_witness(s, e, *down);
  // A map e -> s would force d_lower(e) = 0 <= d_lower(s) = -2: impossible.
  CHECK_FALSE(find_local_map(e, s).has_value());
}

TEST_CASE("local equivalence respects the correction terms") {
  // When maps exist both ways, all three terms agree; when the terms
  // disagree, some direction must fail.
  auto names = preset_names();
  for (const auto& nx : names) {
    for (const auto& ny : names) {
      auto x = preset(nx);
      auto y = preset(ny);
      auto cx = correction_terms_cone(x);
      auto cy = correction_terms_cone(y);
      bool same_terms = cx.d == cy.d && cx.d_lower == cy.d_lower &&
                        cx.d_upper == cy.d_upper;
      if (both_ways(x, y)) {
        CHECK_MESSAGE(same_terms, nx << " <-> " << ny);
      }
      if (!same_terms) {
        CHECK_FALSE(both_ways(x, y));
      }
      // One-directional monotonicity: a witness x -> y forces each term
      // of x to be at most the matching term of y.
      if (find_local_map(x, y).has_value()) {
        CHECK(!(cy.d_lower < cx.d_lower));
        CHECK(!(cy.d_upper < cx.d_upper));
      }
    }
  }
}

TEST_CASE("witnesses verify on every preset pair that admits one") {
  auto names = preset_names();
  for (const auto& nx : names) {
    for (const auto& ny : names) {
      auto x = preset(nx);
      auto y = preset(ny);
      auto w = find_local_map(x, y);
      if (w.has_value()) verify_witness(x, y, *w);
    }
  }
}

TEST_CASE("connected sums with opposite summands are locally equivalent") {
  // Y1 = surg # surg and Y2 = surg # (-L(3,1)) share all three terms and
  // are locally equivalent in both directions after summing with Z.
  auto y1 = preset("surg_m3_T27^2");
  auto y2 = preset("surg_m3_T27#minus_L31");
  auto c1 = correction_terms_cone(y1);
  auto c2 = correction_terms_cone(y2);
  CHECK(c1.d == c2.d);
  CHECK(c1.d_lower == c2.d_lower);
  CHECK(c1.d_upper == c2.d_upper);

  auto z = preset("surg_5_mT211");
  auto s1 = correction_terms_cone(tensor(y1, z));
  auto s2 = correction_terms_cone(tensor(y2, z));
  // The sums are told apart by d_lower: (-2, 0, 2) vs (0, 0, 2).
  CHECK(s1.d == Grading(0));
  CHECK(s1.d_lower == Grading(-2));
  CHECK(s1.d_upper == Grading(2));
  CHECK(s2.d == Grading(0));
  CHECK(s2.d_lower == Grading(0));
  CHECK(s2.d_upper == Grading(2));
  // So Y1 # Z cannot dominate-and-be-dominated by Y2 # Z.
  CHECK_FALSE(both_ways(tensor(y1, z), tensor(y2, z)));
}

TEST_CASE("group operations") {
  auto e = group_unit();
  CHECK(e.complex.gens.size() == 1);
  CHECK(e.complex.gens.grading(0) == Grading(-2));
  CHECK(validate_iota(e).ok());

  auto s = preset("sigma_2_3_7");
  // Product with the unit is locally equivalent to the original.
  auto p = group_product(s, e);
  CHECK(both_ways(p, s));
  // The inverse is the dual: product with it is locally equivalent to e.
  auto inv = group_inverse(s);
  auto q = group_product(s, inv);
  CHECK(both_ways(q, e));
}

TEST_CASE("duality witness for the unit is the identity pair") {
  auto w = duality_witness(group_unit());
  CHECK(w.product.complex.gens.size() == 1);
  auto ge = w.gamma.entries();
  REQUIRE(ge.size() == 1);
  CHECK(ge[0].exponent == 0);
  auto ze = w.zeta.entries();
  REQUIRE(ze.size() == 1);
  CHECK(w.gamma_homotopy.entries().empty());
  CHECK(w.zeta_homotopy.entries().empty());
}

TEST_CASE("duality witnesses verify on every built-in model") {
  for (const auto& name : preset_names()) {
    auto x = preset(name);
    auto w = duality_witness(x);
    const auto& p = w.product;
    CHECK(p.complex.gens.size() ==
          x.complex.gens.size() * x.complex.gens.size());

    auto e = group_unit();
    // gamma: e -> product hits the diagonal sum, an odd number of terms.
    CHECK(is_chain_map(e.complex, p.complex, w.gamma));
    CHECK(w.gamma.entries().size() == (size_t)x.complex.gens.size());
    // zeta: product -> e is the trace; zeta gamma = id.
    CHECK(is_chain_map(p.complex, e.complex, w.zeta));
    CHECK(compose(w.zeta, w.gamma) == MonoMatrix::identity(e.complex.gens));
    // Both commute with the involutions up to their homotopies.
    MonoMatrix glhs = add(compose(w.gamma, e.iota), compose(p.iota, w.gamma));
    CHECK(glhs == add(compose(p.complex.diff, w.gamma_homotopy),
                      compose(w.gamma_homotopy, e.complex.diff)));
    MonoMatrix zlhs = add(compose(w.zeta, p.iota), compose(e.iota, w.zeta));
    CHECK(zlhs == add(compose(e.complex.diff, w.zeta_homotopy),
                      compose(w.zeta_homotopy, p.complex.diff)));
  }
}

TEST_CASE("product with the dual is locally equivalent to the unit") {
  for (const auto& name : preset_names()) {
    auto x = preset(name);
    auto p = tensor(x, dual(x));
    auto e = group_unit();
    auto down = find_local_map(p, e);
    auto up = find_local_map(e, p);
    REQUIRE_MESSAGE(down.has_value(), name);
    REQUIRE_MESSAGE(up.has_value(), name);
    verify_witness(p, e, *down);
    verify_witness(e, p, *up);
  }
}

TEST_CASE("local maps between random models respect term order") {
  testutil::Rng rng(0x10CA1);
  for (int trial = 0; trial < 12; ++trial) {
    auto x = testutil::random_iota(rng, 2, Grading(0), 10);
    auto y = testutil::random_iota(rng, 1, Grading(0), 10);
    auto w = find_local_map(x, y);
    if (w.has_value()) {
      verify_witness(x, y, *w);
      auto cx = correction_terms_cone(x);
      auto cy = correction_terms_cone(y);
      CHECK(!(cy.d_lower < cx.d_lower));
      CHECK(!(cy.d_upper < cx.d_upper));
    }
  }
}
