#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wha/drinfeld_double.hpp"

using namespace wha;

namespace {

const Field kQ = Field::rationals();

// Independent hand-coded structure constants of the classical double of
// the order-two group: basis g^i (x) delta_{g^a}, product
// (g^i, d_a)(g^j, d_b) = [a = b] (g^{i+j}, d_a), coproduct
// Delta(g^i, d_a) = sum_{a1 + a2 = a} (g^i, d_{a1}) (x) (g^i, d_{a2}),
// counit (g^i, d_a) |-> [a = 0], antipode (g^i, d_a) |-> (g^{-i}, d_{-a}).
struct ClassicalDoubleZ2 {
  LinearMap mult{kQ, 4, 16};
  LinearMap comult{kQ, 16, 4};
  Vec counit{kQ, 4};
  LinearMap antipode{kQ, 4, 4};

  static std::size_t idx(std::size_t i, std::size_t a) { return i * 2 + a; }

  ClassicalDoubleZ2() {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t b = 0; b < 2; ++b) {
            if (a == b) {
              mult.at(idx((i + j) % 2, a), idx(i, a) * 4 + idx(j, b)) =
                  Scalar::one(kQ);
            }
          }
        for (std::size_t a1 = 0; a1 < 2; ++a1) {
          std::size_t a2 = (a + 2 - a1) % 2;
          comult.at(idx(i, a1) * 4 + idx(i, a2), idx(i, a)) = Scalar::one(kQ);
        }
        counit[idx(i, a)] = a == 0 ? Scalar::one(kQ) : Scalar::zero(kQ);
        antipode.at(idx((2 - i) % 2, (2 - a) % 2), idx(i, a)) =
            Scalar::one(kQ);
      }
  }
};

}  // namespace

TEST_CASE("the double of the order-two group algebra is the classical one") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
  auto [rep, d] = drinfeld_double(h);
  INFO(rep.summary());
  CHECK(rep.all_passed());
  REQUIRE(d.dbl.dim() == 4);
  // p is the identity, so ambient coordinates h (x) delta_a are the double's
  CHECK(d.project == LinearMap::identity(kQ, 4));

  ClassicalDoubleZ2 oracle;
  CHECK(d.dbl.base.alg.mult == oracle.mult);
  CHECK(d.dbl.base.coalg.comult == oracle.comult);
  CHECK(d.dbl.base.coalg.counit == oracle.counit);
  CHECK(d.dbl.antipode == oracle.antipode);
  CHECK(d.dbl.base.alg.unit ==
        kron_vec(h.base.alg.unit, h.base.coalg.counit));
}

TEST_CASE("double dimensions across the corpus") {
  SUBCASE("ordinary Hopf: kernel zero") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    auto [rep, d] = drinfeld_double(h);
    CHECK(d.dbl.dim() == 4);
    CHECK(Subspace::kernel(d.ambient.p).dim() == 0);
  }
  SUBCASE("discrete groupoid: kernel dimension 4 - rank") {
    WeakHopfAlgebra h = groupoid_algebra(discrete_groupoid(2), kQ);
    auto [rep, d] = drinfeld_double(h);
    CHECK(rep.all_passed());
    CHECK(d.dbl.dim() == 2);
    CHECK(Subspace::kernel(d.ambient.p).dim() == 2);
  }
  SUBCASE("pair groupoid") {
    WeakHopfAlgebra h = groupoid_algebra(pair_groupoid(2), kQ);
    auto [rep, d] = drinfeld_double(h);
    INFO(rep.summary());
    CHECK(rep.all_passed());
    CHECK(d.dbl.dim() + Subspace::kernel(d.ambient.p).dim() == 16);
  }
}

TEST_CASE("kernel of p equals the span description") {
  for (auto g : {cyclic_group(2), discrete_groupoid(2), pair_groupoid(2)}) {
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    auto [rep, d] = drinfeld_double(h);
    Report krep = kernel_equals_j(h, d);
    INFO(krep.summary());
    CHECK(krep.all_passed());
  }
}

TEST_CASE("the twisted dual-side double and the anti-isomorphism") {
  for (auto g : {cyclic_group(2), discrete_groupoid(2), pair_groupoid(2)}) {
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    auto [rep, d] = drinfeld_double(h);
    auto [prep, dp] = dprime_and_f(h, d);
    INFO(prep.summary());
    CHECK(prep.all_passed());
    CHECK(dp.whopf.dim() == d.dbl.dim());
  }
}

TEST_CASE("the double's target subalgebra is the original one") {
  for (auto g : {cyclic_group(2), discrete_groupoid(2), pair_groupoid(2)}) {
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    auto [rep, d] = drinfeld_double(h);
    Report trep = verify_double_target_iso(h, d);
    INFO(trep.summary());
    CHECK(trep.all_passed());
    CHECK(d.dbl.base.target_space.dim() == h.base.target_space.dim());
  }
}

TEST_CASE("lr Yetter-Drinfeld modules become double modules") {
  Groupoid pg = pair_groupoid(2);
  WeakHopfAlgebra h = groupoid_algebra(pg, kQ);
  auto [rep, d] = drinfeld_double(h);
  YDModule sg = yd_standard_graded(pg, h);
  YDModule lr = yd_convert(h, sg, YDVariant::LR);

  auto [mrep, dm] = yd_to_double_module(h, d, lr);
  INFO(mrep.summary());
  CHECK(mrep.all_passed());
  REQUIRE(dm.has_value());
  CHECK(verify_module(d.dbl.base.alg, *dm).all_passed());

  SUBCASE("the adjoint module over the group algebra matches the classical action") {
    WeakHopfAlgebra z2 = groupoid_algebra(cyclic_group(2), kQ);
    auto [zrep, zd] = drinfeld_double(z2);
    YDModule adj = yd_convert(z2, yd_adjoint(z2), YDVariant::LR);
    auto [arep, am] = yd_to_double_module(z2, zd, adj);
    REQUIRE(am.has_value());
    // the adjoint action of an abelian group algebra is trivial and the
    // coaction grades by group elements, so (g^i, delta_a) m_k = [a=k] m_k
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t k = 0; k < 2; ++k) {
          Vec got = am->act[i * 2 + a].apply(Vec::basis(kQ, 2, k));
          Vec expect = a == k ? Vec::basis(kQ, 2, k) : Vec(kQ, 2);
          CHECK(got == expect);
        }
  }

  SUBCASE("a corrupted coaction is caught by the kernel condition") {
    LinearMap bad = lr.coaction;
    bad.at(1, 0) = bad.at(1, 0) + Scalar::one(kQ);
    YDModule broken{YDVariant::LR, lr.dim, lr.module, bad};
    auto [brep, bm] = yd_to_double_module(h, d, broken);
    CHECK_FALSE(brep.all_passed());
    CHECK_FALSE(bm.has_value());
    REQUIRE(brep.first_failure() != nullptr);
    CHECK(brep.first_failure()->name == "action_kills_kernel");
    REQUIRE(brep.first_failure()->witness.has_value());
    CHECK(brep.first_failure()->witness->lhs !=
          brep.first_failure()->witness->rhs);
  }
  SUBCASE("every single-entry corruption is detected somewhere") {
    for (std::size_t r = 0; r < lr.coaction.rows(); ++r) {
      LinearMap bad = lr.coaction;
      bad.at(r, 0) = bad.at(r, 0) + Scalar::one(kQ);
      auto [brep, bm] =
          yd_to_double_module(h, d, {YDVariant::LR, lr.dim, lr.module, bad});
      CHECK_FALSE(brep.all_passed());
    }
  }
}

TEST_CASE("the switch map is a double-linear isomorphism on tensor products") {
  Groupoid pg = pair_groupoid(2);
  WeakHopfAlgebra h = groupoid_algebra(pg, kQ);
  auto [rep, d] = drinfeld_double(h);
  YDModule sg = yd_convert(h, yd_standard_graded(pg, h), YDVariant::LR);
  YDModule unit = yd_convert(h, yd_unit_object(h), YDVariant::LR);
  for (auto [m, n] : {std::pair{sg, sg}, std::pair{sg, unit},
                      std::pair{unit, sg}}) {
    Report mrep = verify_double_module_monoidal(h, d, m, n);
    INFO(mrep.summary());
    CHECK(mrep.all_passed());
  }
}

TEST_CASE("doubles over a prime field") {
  Field f5 = Field::prime(5);
  WeakHopfAlgebra h = groupoid_algebra(pair_groupoid(2), f5);
  auto [rep, d] = drinfeld_double(h);
  INFO(rep.summary());
  CHECK(rep.all_passed());
  CHECK(kernel_equals_j(h, d).all_passed());
}

TEST_CASE("Yetter-Drinfeld morphisms stay linear over the double") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
  auto [rep, d] = drinfeld_double(h);
  YDModule adj = yd_convert(h, yd_adjoint(h), YDVariant::LR);
  auto [mrep, dm] = yd_to_double_module(h, d, adj);
  REQUIRE(dm.has_value());
  // the grade projections are lr morphisms of the adjoint module (the
  // action is trivial and the coaction is diagonal in this basis)
  for (std::size_t g = 0; g < 2; ++g) {
    LinearMap proj(kQ, 2, 2);
    proj.at(g, g) = Scalar::one(kQ);
    // morphism laws over H
    for (std::size_t k = 0; k < h.dim(); ++k)
      CHECK(matmul(proj, adj.module.act[k]) ==
            matmul(adj.module.act[k], proj));
    CHECK(matmul(adj.coaction, proj) ==
          matmul(kron(proj, LinearMap::identity(kQ, 2)), adj.coaction));
    // hence linear over every double basis element
    for (std::size_t c = 0; c < d.dbl.dim(); ++c)
      CHECK(matmul(proj, dm->act[c]) == matmul(dm->act[c], proj));
  }
}
