#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wha/duality.hpp"

// The quantum-groupoid structure on R (x) R^op for R = M_2: the
// comultiplication splits through the symmetric separability idempotent
// e = (1/2) sum e_kl (x) e_lk, the counit is the dual trace form, and the
// antipode swaps the factors. Its target subalgebra is isomorphic to R
// itself, so this is the one corpus member whose base subalgebras are
// noncommutative.

using namespace wha;

namespace {

const Field kQ = Field::rationals();

// basis of R (x) R^op: (e_ab, e_cd) at index ((a*2+b)*4) + (c*2+d)
std::size_t unit_idx(std::size_t a, std::size_t b) { return a * 2 + b; }
std::size_t pair_idx(std::size_t ab, std::size_t cd) { return ab * 4 + cd; }

WeakHopfAlgebra matrix_pair_algebra() {
  const std::size_t n = 16;
  AlgebraData alg{kQ, n, LinearMap(kQ, n, n * n), Vec(kQ, n)};
  // (x (x) y)(z (x) w) = xz (x) wy ; e_ab e_cd = [b = c] e_ad
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        for (std::size_t d = 0; d < 2; ++d)
          for (std::size_t p = 0; p < 2; ++p)
            for (std::size_t q = 0; q < 2; ++q)
              for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s = 0; s < 2; ++s) {
                  if (b != p || s != c) continue;
                  std::size_t left = pair_idx(unit_idx(a, b), unit_idx(c, d));
                  std::size_t right = pair_idx(unit_idx(p, q), unit_idx(r, s));
                  std::size_t out = pair_idx(unit_idx(a, q), unit_idx(r, d));
                  alg.mult.at(out, left * n + right) =
                      alg.mult.at(out, left * n + right) + Scalar::one(kQ);
                }
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l)
      alg.unit[pair_idx(unit_idx(k, k), unit_idx(l, l))] = Scalar::one(kQ);

  CoalgebraData co{kQ, n, LinearMap(kQ, n * n, n), Vec(kQ, n)};
  const Scalar half = Scalar::fraction(1, 2, kQ);
  // Delta(x (x) y) = (1/2) sum_kl (x (x) e_kl) (x) (e_lk (x) y)
  for (std::size_t xy = 0; xy < n; ++xy) {
    std::size_t x = xy / 4, y = xy % 4;
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t l = 0; l < 2; ++l) {
        std::size_t first = pair_idx(x, unit_idx(k, l));
        std::size_t second = pair_idx(unit_idx(l, k), y);
        co.comult.at(first * n + second, xy) =
            co.comult.at(first * n + second, xy) + half;
      }
  }
  // eps(x (x) y) = 2 tr(x y), products taken in R
  for (std::size_t xy = 0; xy < n; ++xy) {
    std::size_t x = xy / 4, y = xy % 4;
    std::size_t xa = x / 2, xb = x % 2, ya = y / 2, yb = y % 2;
    if (xb == ya && yb == xa)
      co.counit[xy] = Scalar::of_int(2, kQ);
  }

  WeakHopfAlgebra h;
  h.base = WeakBialgebra::build(std::move(alg), std::move(co));
  h.antipode = LinearMap(kQ, n, n);
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      h.antipode.at(pair_idx(y, x), pair_idx(x, y)) = Scalar::one(kQ);
  h.antipode_inv = h.antipode;
  return h;
}

}  // namespace

TEST_CASE("the matrix-pair quantum groupoid is a weak Hopf algebra") {
  WeakHopfAlgebra h = matrix_pair_algebra();
  auto [brep, built] = verify_weak_bialgebra(h.base.alg, h.base.coalg);
  INFO(brep.summary());
  CHECK(brep.all_passed());
  Report hrep = verify_weak_hopf(h);
  INFO(hrep.summary());
  CHECK(hrep.all_passed());
}

TEST_CASE("its base subalgebras are full matrix blocks") {
  WeakHopfAlgebra h = matrix_pair_algebra();
  CHECK(h.base.target_space.dim() == 4);
  CHECK(h.base.source_space.dim() == 4);
  // noncommutative: some pair of target basis elements fails to commute
  bool noncommutative = false;
  for (std::size_t i = 0; i < 4 && !noncommutative; ++i)
    for (std::size_t j = 0; j < 4 && !noncommutative; ++j) {
      Vec z = h.base.target_space.basis_vector(i);
      Vec w = h.base.target_space.basis_vector(j);
      noncommutative = h.mul(z, w) != h.mul(w, z);
    }
  CHECK(noncommutative);
}

TEST_CASE("antipode solver handles the matrix-pair algebra") {
  WeakHopfAlgebra h = matrix_pair_algebra();
  AntipodeSolution sol = solve_antipode(h.base);
  REQUIRE(sol.status == AntipodeSolution::Status::Found);
  CHECK(*sol.antipode == h.antipode);
}

TEST_CASE("unit object and duality with a noncommutative base") {
  WeakHopfAlgebra h = matrix_pair_algebra();
  YDModule unit = yd_unit_object(h);
  auto [rep, yd] = check_yd(h, unit.variant, unit.module, unit.coaction);
  INFO(rep.summary());
  CHECK(rep.all_passed());
  CHECK(verify_conversion_cycles(h, unit).all_passed());
  CHECK(verify_braiding(h, unit, unit).all_passed());
  Report drep = verify_left_duality(h, unit);
  INFO(drep.summary());
  CHECK(drep.all_passed());
}

TEST_CASE("monoidal layer over the matrix-pair algebra") {
  WeakHopfAlgebra h = matrix_pair_algebra();
  ModuleData tm = h.base.target_module();
  // use the target module itself as a small probe module
  CHECK(verify_unit_constraints(h.base, tm).all_passed());
  CHECK(verify_tensor_over_ht(h.base, tm, tm).all_passed());
}
