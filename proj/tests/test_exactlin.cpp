#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wha/rref.hpp"
#include "wha/tensor.hpp"
#include "wha/verify.hpp"

using namespace wha;

namespace {

const Field kQ = Field::rationals();

Scalar q(long num, long den = 1) { return Scalar::fraction(num, den, kQ); }

LinearMap mat(std::vector<std::vector<long>> rows) {
  std::vector<Vec> rs;
  for (auto& r : rows) {
    Vec v(kQ, r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = q(r[i]);
    rs.push_back(v);
  }
  return LinearMap::from_rows(kQ, rows.empty() ? 0 : rows[0].size(), rs);
}

LinearMap random_matrix(std::size_t rows, std::size_t cols,
                        std::mt19937_64& rng) {
  LinearMap m(kQ, rows, cols);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::fraction(num(rng), den(rng), kQ);
  return m;
}

}  // namespace

TEST_CASE("rational scalars reduce to lowest terms") {
  Scalar a = q(2, 4);
  CHECK(a == q(1, 2));
  CHECK(a.str() == "1/2");
  CHECK((q(1, 3) + q(2, 5)).str() == "11/15");
  CHECK((q(1, 2) * q(2, 3)) == q(1, 3));
  CHECK((q(3) / q(6)) == q(1, 2));
  CHECK((-q(0)).is_zero());
  CHECK_THROWS_AS(Scalar::fraction(1, 0, kQ), Error);
  CHECK_THROWS_AS(q(1) / q(0), Error);
}

TEST_CASE("prime fields") {
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  Field f7 = Field::prime(7);
  Scalar a = Scalar::of_int(3, f7), b = Scalar::of_int(5, f7);
  CHECK((a + b).str() == "1");
  CHECK((a * b).str() == "1");
  CHECK(a.inverse() == b);  // 3*5 = 15 = 1 mod 7
  CHECK(Scalar::fraction(1, 2, f7) == Scalar::of_int(4, f7));
  CHECK_THROWS_AS(Scalar::fraction(1, 7, f7), Error);
  CHECK_THROWS_AS(a + q(1), Error);  // mixed fields
}

TEST_CASE("rref and kernel on the stated examples") {
  auto [img_id, ker_id] = rref_and_kernel(LinearMap::identity(kQ, 2));
  CHECK(img_id.dim() == 2);
  CHECK(ker_id.dim() == 0);

  auto [img_zero, ker_zero] = rref_and_kernel(LinearMap(kQ, 2, 2));
  CHECK(img_zero.dim() == 0);
  CHECK(ker_zero.dim() == 2);

  // hand row-reduction oracle: [[1,2],[2,4]] has rank 1 and kernel
  // spanned by (-2,1), normalized to (1,-1/2) by the pivot convention
  auto [img, ker] = rref_and_kernel(mat({{1, 2}, {2, 4}}));
  CHECK(img.dim() == 1);
  REQUIRE(ker.dim() == 1);
  Vec k = ker.basis_vector(0);
  CHECK(k[0] == q(1));
  CHECK(k[1] == q(-1, 2));
}

TEST_CASE("solve_linear on the stated examples") {
  SUBCASE("identity is unique") {
    Vec b(kQ, 3);
    b[0] = q(5);
    b[2] = q(-1, 3);
    SolutionSet s = solve_linear(LinearMap::identity(kQ, 3), b);
    REQUIRE(s.kind == SolutionSet::Kind::Unique);
    CHECK(*s.particular == b);
  }
  SUBCASE("zero map with zero rhs gives the whole space") {
    SolutionSet s = solve_linear(LinearMap(kQ, 2, 2), Vec(kQ, 2));
    REQUIRE(s.kind == SolutionSet::Kind::Affine);
    CHECK(s.kernel.dim() == 2);
    CHECK(s.particular->is_zero());
  }
  SUBCASE("hand elimination oracle") {
    Vec b(kQ, 1);
    b[0] = q(3);
    SolutionSet s = solve_linear(mat({{1, 1}}), b);
    REQUIRE(s.kind == SolutionSet::Kind::Affine);
    CHECK((*s.particular)[0] == q(3));
    CHECK((*s.particular)[1] == q(0));
    REQUIRE(s.kernel.dim() == 1);
    CHECK(s.kernel.basis_vector(0)[0] == q(1));
    CHECK(s.kernel.basis_vector(0)[1] == q(-1));
  }
  SUBCASE("inconsistent system is an empty value") {
    Vec b(kQ, 2);
    b[1] = q(1);
    SolutionSet s = solve_linear(mat({{1, 1}, {1, 1}}), b);
    CHECK(s.empty());
  }
}

TEST_CASE("kron under the row-major pairing") {
  CHECK(kron(LinearMap::identity(kQ, 2), LinearMap::identity(kQ, 3)) ==
        LinearMap::identity(kQ, 6));
  std::mt19937_64 rng(11);
  LinearMap a = random_matrix(2, 2, rng);
  CHECK(kron(a, LinearMap(kQ, 2, 2)).is_zero());

  SUBCASE("associativity on random factors") {
    for (int rep = 0; rep < 8; ++rep) {
      LinearMap x = random_matrix(2, 2, rng);
      LinearMap y = random_matrix(2, 3, rng);
      LinearMap z = random_matrix(3, 2, rng);
      CHECK(kron(kron(x, y), z) == kron(x, kron(y, z)));
    }
  }
  SUBCASE("bilinearity") {
    for (int rep = 0; rep < 8; ++rep) {
      LinearMap x = random_matrix(3, 2, rng);
      LinearMap y = random_matrix(3, 2, rng);
      LinearMap z = random_matrix(2, 3, rng);
      CHECK(kron(x + y, z) == kron(x, z) + kron(y, z));
      CHECK(kron(z, x + y) == kron(z, x) + kron(z, y));
    }
  }
  SUBCASE("acts as f (x) g on simple tensors") {
    for (int rep = 0; rep < 8; ++rep) {
      LinearMap x = random_matrix(3, 2, rng);
      LinearMap y = random_matrix(2, 4, rng);
      Vec u = random_matrix(2, 1, rng).column(0);
      Vec v = random_matrix(4, 1, rng).column(0);
      CHECK(kron(x, y).apply(kron_vec(u, v)) ==
            kron_vec(x.apply(u), y.apply(v)));
    }
  }
}

TEST_CASE("rank-nullity on random square matrices") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 16; ++rep) {
    std::size_t n = 1 + rep % 6;
    LinearMap m = random_matrix(n, n, rng);
    auto [img, ker] = rref_and_kernel(m);
    CHECK(img.dim() + ker.dim() == n);
    for (std::size_t i = 0; i < ker.dim(); ++i) {
      CHECK(m.apply(ker.basis_vector(i)).is_zero());
    }
  }
}

TEST_CASE("subspace equality is basis independent") {
  Vec a(kQ, 3), b(kQ, 3);
  a[0] = q(1);
  a[1] = q(2);
  b[1] = q(1);
  b[2] = q(3);
  Vec c = a + b.scaled(q(2));
  Vec d = a - b;
  Subspace s1 = Subspace::from_span(kQ, 3, {a, b});
  Subspace s2 = Subspace::from_span(kQ, 3, {c, d, c + d});
  CHECK(s1 == s2);
  CHECK(s1.contains(c));
  CHECK_FALSE(s1.contains(Vec::basis(kQ, 3, 2)));
}

TEST_CASE("parallel kernels match the serial references") {
  std::mt19937_64 rng(37);
  LinearMap a = random_matrix(17, 13, rng);
  LinearMap b = random_matrix(13, 19, rng);
  CHECK(matmul(a, b) == ref::matmul(a, b));
  CHECK(kron(a, b) == ref::kron(a, b));
  LinearMap m = random_matrix(18, 24, rng);
  RrefResult r1 = rref(m), r2 = ref::rref(m);
  CHECK(r1.mat == r2.mat);
  CHECK(r1.pivots == r2.pivots);
  auto pred = [&](std::size_t i) { return i % 97 != 41 || i < 300; };
  CHECK(first_violation(1000, pred) == ref::first_violation(1000, pred));
  CHECK(first_violation(300, pred) == ref::first_violation(300, pred));
}

TEST_CASE("tensor calculus basics") {
  std::mt19937_64 rng(41);
  LinearMap m = random_matrix(3, 4, rng);
  Vec v = random_matrix(4, 1, rng).column(0);
  Tensor t = Tensor::from_vec(v).apply(m, 0, 1, {3});
  CHECK(t.as_vec() == m.apply(v));

  Vec u = random_matrix(2, 1, rng).column(0);
  Tensor uv = Tensor::from_vec(u).tensor_with(Tensor::from_vec(v));
  Tensor vu = Tensor::from_vec(v).tensor_with(Tensor::from_vec(u));
  CHECK(uv.permute({1, 0}) == vu);
  CHECK(uv.permute({0, 1}) == uv);

  Vec cov(kQ, 2);
  cov[0] = q(2);
  cov[1] = q(-1);
  Tensor paired = uv.pair_with(cov, 0);
  CHECK(paired.as_vec() == v.scaled(cov.dot(u)));
}

TEST_CASE("quotient coordinates") {
  Vec r1(kQ, 3);
  r1[0] = q(1);
  r1[2] = q(-1);
  Subspace rel = Subspace::from_span(kQ, 3, {r1});
  Quotient quo(kQ, 3, rel);
  CHECK(quo.dim() == 2);
  CHECK(matmul(quo.projection(), quo.section()) ==
        LinearMap::identity(kQ, 2));
  // e_0 and e_2 fall in the same class
  CHECK(quo.projection().apply(Vec::basis(kQ, 3, 0)) ==
        quo.projection().apply(Vec::basis(kQ, 3, 2)));
}
