#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wha/drinfeld_double.hpp"

using namespace wha;

namespace {

const Field kQ = Field::rationals();

LinearMap flip_map(std::size_t da, std::size_t db) {
  LinearMap s(kQ, db * da, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      s.at(j * da + i, i * db + j) = Scalar::one(kQ);
  return s;
}

}  // namespace

TEST_CASE("preunital algebras") {
  SUBCASE("an honest unit gives p = id") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    auto [rep, pa] = make_preunital(kQ, h.base.alg.mult, h.base.alg.unit);
    CHECK(rep.all_passed());
    CHECK(pa.p == LinearMap::identity(kQ, 2));
    CHECK(pa.image.dim() == 2);
    UnitalQuotient q = preunit_quotient(pa);
    CHECK(q.algebra.dim == 2);
    CHECK(verify_preunit_quotient(pa).all_passed());
  }
  SUBCASE("an idempotent preunit kills the complement") {
    // basis u, v with u^2 = u, uv = vu = v^2 = 0 and preunit u
    LinearMap mult(kQ, 2, 4);
    mult.at(0, 0) = Scalar::one(kQ);
    Vec e = Vec::basis(kQ, 2, 0);
    auto [rep, pa] = make_preunital(kQ, mult, e);
    INFO(rep.summary());
    CHECK(rep.all_passed());
    CHECK(pa.image.dim() == 1);
    UnitalQuotient q = preunit_quotient(pa);
    CHECK(q.algebra.dim == 1);
    CHECK(q.algebra.mul(Vec::basis(kQ, 1, 0), Vec::basis(kQ, 1, 0)) ==
          Vec::basis(kQ, 1, 0));
    CHECK(verify_preunit_quotient(pa).all_passed());
  }
  SUBCASE("a broken preunit law is reported") {
    // v e = 0 but e v = v: not a preunit
    LinearMap mult(kQ, 2, 4);
    mult.at(0, 0) = Scalar::one(kQ);   // u u = u
    mult.at(1, 1) = Scalar::one(kQ);   // u v = v
    auto [rep, pa] = make_preunital(kQ, mult, Vec::basis(kQ, 2, 0));
    CHECK_FALSE(rep.all_passed());
    CHECK(rep.first_failure()->name == "preunit_law");
  }
}

TEST_CASE("the flip is a smash structure for any pair of unital algebras") {
  WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
  WeakHopfAlgebra d = dual_weak_hopf(h);
  WeakSmashStructure s{h.base.alg, d.base.alg, flip_map(2, 2)};
  CHECK(verify_smash_structure(s).all_passed());
  auto [rep, pa] = smash_product(s);
  INFO(rep.summary());
  CHECK(rep.all_passed());
  // the preunit is a genuine unit here
  CHECK(pa.p == LinearMap::identity(kQ, 4));
  CHECK(pa.image.dim() == 4);
}

TEST_CASE("smash product over the double R-map") {
  SUBCASE("ordinary Hopf algebra: quotient is everything") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    WeakSmashStructure s{h.base.alg, dual_weak_hopf(h).base.alg,
                         double_r_map(h)};
    auto [rep, pa] = smash_product(s);
    CHECK(rep.all_passed());
    CHECK(pa.p == LinearMap::identity(kQ, 4));
    CHECK(pa.image.dim() == 4);
  }
  SUBCASE("discrete groupoid: rank drops") {
    WeakHopfAlgebra h = groupoid_algebra(discrete_groupoid(2), kQ);
    WeakSmashStructure s{h.base.alg, dual_weak_hopf(h).base.alg,
                         double_r_map(h)};
    auto [rep, pa] = smash_product(s);
    CHECK(rep.all_passed());
    CHECK(pa.image.dim() == 2);
    CHECK(Subspace::kernel(pa.p).dim() == 2);
  }
}

TEST_CASE("weak entwining axioms") {
  SUBCASE("the identity map is a trivial entwining") {
    WeakHopfAlgebra h = groupoid_algebra(cyclic_group(2), kQ);
    WeakEntwining e{h.base.alg, h.base.coalg, LinearMap::identity(kQ, 4)};
    CHECK(verify_weak_entwining(e).all_passed());
  }
  SUBCASE("the canonical entwining passes on the corpus") {
    for (auto g : {cyclic_group(2), discrete_groupoid(2), pair_groupoid(2)}) {
      WeakHopfAlgebra h = groupoid_algebra(g, kQ);
      WeakEntwining e{h.base.alg, h.base.coalg, canonical_entwining_psi(h)};
      Report rep = verify_weak_entwining(e);
      INFO(rep.summary());
      CHECK(rep.all_passed());
    }
  }
}

TEST_CASE("the canonical weak Doi-Hopf datum") {
  for (auto g : {cyclic_group(2), discrete_groupoid(2), pair_groupoid(2)}) {
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    DoiHopfDatum d = canonical_yd_datum(h);
    Report rep = verify_doihopf(d);
    INFO(rep.summary());
    CHECK(rep.all_passed());
    // the induced entwining is the closed-form map
    WeakEntwining e = doihopf_to_entwining(d);
    CHECK(e.psi == canonical_entwining_psi(h));
    CHECK(verify_weak_entwining(e).all_passed());
  }
}

TEST_CASE("entwined modules are the lr Yetter-Drinfeld modules") {
  Groupoid pg = pair_groupoid(2);
  WeakHopfAlgebra h = groupoid_algebra(pg, kQ);
  WeakEntwining e = doihopf_to_entwining(canonical_yd_datum(h));
  YDModule sg = yd_standard_graded(pg, h);
  YDModule lr = yd_convert(h, sg, YDVariant::LR);

  Report good = entwined_module_check(e, lr.module, lr.coaction);
  CHECK(good.all_passed());
  auto [yrep, yd] = check_yd(h, YDVariant::LR, lr.module, lr.coaction);
  CHECK(yrep.all_passed());

  SUBCASE("a corrupted coaction fails both checkers on the same pair") {
    LinearMap bad = lr.coaction;
    bad.at(0, 0) = bad.at(0, 0) - Scalar::one(kQ);
    Report r1 = entwined_module_check(e, lr.module, bad);
    auto [r2, none] = check_yd(h, YDVariant::LR, lr.module, bad);
    CHECK_FALSE(r1.all_passed());
    CHECK_FALSE(r2.all_passed());
    CHECK_FALSE(none.has_value());
  }
  SUBCASE("the truncated regular comodule with the regular action") {
    // rho = the lr coaction of the regular module seen as an lr module:
    // use the unit object tensored into the regular action instead; the
    // graded module conversions already cover the nontrivial case, so
    // here take the unit object.
    YDModule unit_lr = yd_convert(h, yd_unit_object(h), YDVariant::LR);
    CHECK(entwined_module_check(e, unit_lr.module, unit_lr.coaction)
              .all_passed());
  }
}

TEST_CASE("entwining to smash transport matches the double R-map") {
  for (auto g : {cyclic_group(2), discrete_groupoid(2), pair_groupoid(2)}) {
    WeakHopfAlgebra h = groupoid_algebra(g, kQ);
    WeakEntwining e{h.base.alg, h.base.coalg, canonical_entwining_psi(h)};
    CHECK(smash_r_from_entwining(e) == double_r_map(h));
  }
}
