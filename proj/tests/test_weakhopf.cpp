#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wha/groupoid.hpp"

using namespace wha;

namespace {

const Field kQ = Field::rationals();

// dim-2 non-Hopf candidates: x^2 = x, xy = yx = 0, grouplike x and y,
// with y^2 configurable. Unit declared as x + y even where the unit law
// fails; the antipode solver treats these mechanically.
WeakBialgebra candidate(long y_squared_x, long y_squared_y) {
  AlgebraData alg{kQ, 2, LinearMap(kQ, 2, 4), Vec(kQ, 2)};
  alg.mult.at(0, 0) = Scalar::one(kQ);                       // x*x = x
  alg.mult.at(0, 3) = Scalar::of_int(y_squared_x, kQ);       // y*y
  alg.mult.at(1, 3) = Scalar::of_int(y_squared_y, kQ);
  alg.unit[0] = Scalar::one(kQ);
  alg.unit[1] = Scalar::one(kQ);
  CoalgebraData co{kQ, 2, LinearMap(kQ, 4, 2), Vec(kQ, 2)};
  co.comult.at(0, 0) = Scalar::one(kQ);  // x grouplike
  co.comult.at(3, 1) = Scalar::one(kQ);  // y grouplike
  co.counit[0] = Scalar::one(kQ);
  co.counit[1] = Scalar::one(kQ);
  return WeakBialgebra::build(alg, co);
}

}  // namespace

TEST_CASE("groupoid algebra constructions") {
  SUBCASE("one object gives an ordinary Hopf algebra") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    CHECK(h.dim() == 2);
    CHECK(h.antipode == LinearMap::identity(kQ, 2));  // g^{-1} = g
    CHECK(verify_weak_hopf(h).all_passed());
  }
  SUBCASE("identities only") {
    WeakHopfAlgebra h = groupoid_algebra(discrete_groupoid(2), kQ);
    CHECK(h.dim() == 2);
    CHECK(h.antipode == LinearMap::identity(kQ, 2));
    CHECK(verify_weak_hopf(h).all_passed());
  }
  SUBCASE("pair groupoid swaps the two non-loops") {
    Groupoid g = pair_groupoid(2);
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    CHECK(h.dim() == 4);
    for (std::size_t m = 0; m < 4; ++m) {
      CHECK(h.antipode.column(m) == Vec::basis(kQ, 4, g.inverse[m]));
    }
    Report rep = verify_weak_hopf(h);
    INFO(rep.summary());
    CHECK(rep.all_passed());
    CHECK(rep.checks().size() >= 25);
  }
}

TEST_CASE("malformed groupoids are rejected with a witness") {
  Groupoid g = pair_groupoid(2);
  g.compose[1][2] = 3;  // wrong endpoints for the composite
  CHECK_THROWS_WITH_AS(groupoid_algebra(g, kQ),
                       doctest::Contains("composite endpoints wrong"), Error);
  Groupoid g2 = pair_groupoid(2);
  g2.inverse[1] = 0;
  CHECK_THROWS_WITH_AS(groupoid_algebra(g2, kQ),
                       doctest::Contains("inverse law"), Error);
}

TEST_CASE("antipode solver reproduces groupoid inverses") {
  for (auto g : {cyclic_group(2), cyclic_group(3), discrete_groupoid(2),
                 pair_groupoid(2)}) {
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    AntipodeSolution sol = solve_antipode(h.base);
    REQUIRE(sol.status == AntipodeSolution::Status::Found);
    CHECK(*sol.antipode == h.antipode);
    CHECK(*sol.antipode_inv == h.antipode_inv);
  }
}

TEST_CASE("antipode solver outcomes on non-Hopf candidates") {
  SUBCASE("y^2 = 0 forces a singular solution") {
    AntipodeSolution sol = solve_antipode(candidate(0, 0));
    CHECK(sol.status == AntipodeSolution::Status::NotBijective);
    REQUIRE(sol.particular.has_value());
    // S(x) = x, S(y) = 0 is the unique stacked-system solution
    CHECK(sol.particular->column(0) == Vec::basis(kQ, 2, 0));
    CHECK(sol.particular->column(1) == Vec(kQ, 2));
  }
  SUBCASE("y^2 = x makes the system inconsistent") {
    AntipodeSolution sol = solve_antipode(candidate(1, 0));
    CHECK(sol.status == AntipodeSolution::Status::NotFound);
  }
  SUBCASE("a dead coalgebra component is pinned to zero") {
    // Delta(y) = 0: the convolution conditions at y are vacuous, but the
    // absorbed-projection conditions force S(y) = 0, so the outcome is a
    // unique singular solution rather than an underdetermined system.
    AlgebraData alg{kQ, 2, LinearMap(kQ, 2, 4), Vec(kQ, 2)};
    alg.mult.at(0, 0) = Scalar::one(kQ);
    alg.mult.at(1, 3) = Scalar::one(kQ);  // y^2 = y
    alg.unit[0] = Scalar::one(kQ);
    alg.unit[1] = Scalar::one(kQ);
    CoalgebraData co{kQ, 2, LinearMap(kQ, 4, 2), Vec(kQ, 2)};
    co.comult.at(0, 0) = Scalar::one(kQ);
    co.counit[0] = Scalar::one(kQ);
    co.counit[1] = Scalar::one(kQ);
    AntipodeSolution sol = solve_antipode(WeakBialgebra::build(alg, co));
    CHECK(sol.status == AntipodeSolution::Status::NotBijective);
    REQUIRE(sol.particular.has_value());
    CHECK(sol.particular->column(1).is_zero());
  }
  SUBCASE("a monoid algebra that is not a group algebra has no antipode") {
    // basis 1, y with y^2 = y, both grouplike
    AlgebraData alg{kQ, 2, LinearMap(kQ, 2, 4), Vec::basis(kQ, 2, 0)};
    alg.mult.at(0, 0) = Scalar::one(kQ);
    alg.mult.at(1, 1) = Scalar::one(kQ);
    alg.mult.at(1, 2) = Scalar::one(kQ);
    alg.mult.at(1, 3) = Scalar::one(kQ);
    CoalgebraData co{kQ, 2, LinearMap(kQ, 4, 2), Vec(kQ, 2)};
    co.comult.at(0, 0) = Scalar::one(kQ);
    co.comult.at(3, 1) = Scalar::one(kQ);
    co.counit[0] = Scalar::one(kQ);
    co.counit[1] = Scalar::one(kQ);
    AntipodeSolution sol = solve_antipode(WeakBialgebra::build(alg, co));
    CHECK(sol.status == AntipodeSolution::Status::NotFound);
  }
}

TEST_CASE("dual weak Hopf algebras") {
  SUBCASE("dual of the group algebra is the function algebra") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    WeakHopfAlgebra d = dual_weak_hopf(h);
    CHECK(d.dim() == 2);
    // basis of orthogonal idempotents
    CHECK(d.base.alg.basis_product(0, 0) == Vec::basis(kQ, 2, 0));
    CHECK(d.base.alg.basis_product(1, 1) == Vec::basis(kQ, 2, 1));
    CHECK(d.base.alg.basis_product(0, 1).is_zero());
    auto [rep, built] = verify_weak_bialgebra(d.base.alg, d.base.coalg);
    CHECK(rep.all_passed());
    CHECK(verify_weak_hopf(d).all_passed());
  }
  SUBCASE("discrete groupoid algebra is self dual") {
    WeakHopfAlgebra h = groupoid_algebra(discrete_groupoid(2), kQ);
    WeakHopfAlgebra d = dual_weak_hopf(h);
    CHECK(d.base.alg.mult == h.base.alg.mult);
    CHECK(d.base.alg.unit == h.base.alg.unit);
    CHECK(d.base.coalg.comult == h.base.coalg.comult);
    CHECK(d.antipode == h.antipode);
  }
  SUBCASE("double dual is the identity on structure constants") {
    for (auto g : {cyclic_group(3), pair_groupoid(2)}) {
      WeakHopfAlgebra h = groupoid_algebra(g, kQ);
      WeakHopfAlgebra dd = dual_weak_hopf(dual_weak_hopf(h));
      CHECK(dd.base.alg.mult == h.base.alg.mult);
      CHECK(dd.base.alg.unit == h.base.alg.unit);
      CHECK(dd.base.coalg.comult == h.base.coalg.comult);
      CHECK(dd.base.coalg.counit == h.base.coalg.counit);
      CHECK(dd.antipode == h.antipode);
    }
  }
  SUBCASE("dual suites pass on the corpus") {
    for (auto g : {cyclic_group(2), discrete_groupoid(2), pair_groupoid(2)}) {
      WeakHopfAlgebra d = dual_weak_hopf(groupoid_algebra(g, kQ));
      auto [rep, built] = verify_weak_bialgebra(d.base.alg, d.base.coalg);
      CHECK(rep.all_passed());
      CHECK(verify_weak_hopf(d).all_passed());
    }
  }
}

TEST_CASE("dual pairing actions") {
  SUBCASE("the unit acts trivially") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    Vec phi(kQ, 2);
    phi[0] = Scalar::fraction(2, 3, kQ);
    phi[1] = Scalar::of_int(-1, kQ);
    CHECK(hit_action(h, h.base.alg.unit, phi, h.base.alg.unit) == phi);
  }
  SUBCASE("translation of the dual basis") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    // g -> delta_e = delta_g
    Vec delta_e = Vec::basis(kQ, 2, 0);
    CHECK(hit_action(h, h.basis(1), delta_e, h.base.alg.unit) ==
          Vec::basis(kQ, 2, 1));
  }
  SUBCASE("pair groupoid annihilation") {
    Groupoid g = pair_groupoid(2);
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    std::size_t f = 2;  // a non-loop morphism
    REQUIRE(g.source[f] != g.target[f]);
    Vec delta_f = Vec::basis(kQ, 4, f);
    std::size_t id1 = g.identity[0];
    CHECK(hit_action(h, h.basis(id1), delta_f, h.basis(id1)).is_zero());
  }
  SUBCASE("defining pairing and the bimodule law") {
    WeakHopfAlgebra h = groupoid_algebra(pair_groupoid(2), kQ);
    const std::size_t n = h.dim();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t hh = 0; hh < n; ++hh)
        for (std::size_t k = 0; k < n; ++k) {
          Vec hit = hit_action(h, h.basis(hh), Vec::basis(kQ, n, a),
                               h.basis(k));
          for (std::size_t l = 0; l < n; ++l) {
            Vec klh = h.mul(h.mul(h.basis(k), h.basis(l)), h.basis(hh));
            CHECK(hit[l] == klh[a]);
          }
          // h -> (h' -> phi) = (h h') -> phi
          for (std::size_t h2 = 0; h2 < n; ++h2) {
            Vec lhs = hit_action(h, h.basis(hh),
                                 hit_action(h, h.basis(h2),
                                            Vec::basis(kQ, n, a),
                                            h.base.alg.unit),
                                 h.base.alg.unit);
            Vec rhs = hit_action(h, h.mul(h.basis(hh), h.basis(h2)),
                                 Vec::basis(kQ, n, a), h.base.alg.unit);
            CHECK(lhs == rhs);
          }
        }
  }
}

TEST_CASE("opposite and tensor algebras stay weak Hopf") {
  WeakHopfAlgebra h = groupoid_algebra(pair_groupoid(2), kQ);
  WeakHopfAlgebra o = opposite(h);
  auto [orep, obuilt] = verify_weak_bialgebra(o.base.alg, o.base.coalg);
  CHECK(orep.all_passed());
  CHECK(verify_weak_hopf(o).all_passed());
  WeakHopfAlgebra z = groupoid_algebra(cyclic_group(2), kQ);
  WeakHopfAlgebra t = hopf_tensor(o, z);
  auto [trep, tbuilt] = verify_weak_bialgebra(t.base.alg, t.base.coalg);
  CHECK(trep.all_passed());
  CHECK(verify_weak_hopf(t).all_passed());
}

TEST_CASE("weak hopf suites over a prime field") {
  Field f5 = Field::prime(5);
  WeakHopfAlgebra h = groupoid_algebra(pair_groupoid(2), f5);
  auto [rep, built] = verify_weak_bialgebra(h.base.alg, h.base.coalg);
  CHECK(rep.all_passed());
  CHECK(verify_weak_hopf(h).all_passed());
  AntipodeSolution sol = solve_antipode(h.base);
  REQUIRE(sol.status == AntipodeSolution::Status::Found);
  CHECK(*sol.antipode == h.antipode);
}
