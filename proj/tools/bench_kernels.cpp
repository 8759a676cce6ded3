/**
 * @file bench_kernels.cpp
 * @brief Serial vs OpenMP timings for the exact-arithmetic kernels.
 *
 * Covers the dense rational matrix product, the Kronecker product, row
 * reduction, and the axiom sweep that dominates the verification suites
 * (the weak bialgebra suite over a cyclic group algebra). The Kronecker
 * kernel does one multiplication per output entry, so it is dominated by
 * writes into the shared result and may not gain from threads. Each case checks
 * that the parallel kernel reproduces the serial reference bit for bit.
 *
 * Usage: bench_kernels [--quick]
 */

#include <chrono>
#include <cstdio>
#include <cstring>
#include <random>

#include "wha/groupoid.hpp"
#include "wha/verify.hpp"

using namespace wha;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

LinearMap random_matrix(std::size_t rows, std::size_t cols,
                        std::mt19937_64& rng) {
  Field f = Field::rationals();
  LinearMap m(f, rows, cols);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = Scalar::fraction(num(rng), den(rng), f);
  return m;
}

void row(const char* name, double serial, double parallel, bool match) {
  std::printf("%-28s %10.3fs %10.3fs %6.2fx   %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              match ? "exact match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::mt19937_64 rng(20240915);
  bool all_match = true;

  std::printf("%-28s %11s %11s %7s\n", "kernel", "serial", "openmp",
              "speedup");

  {
    std::size_t n = quick ? 40 : 140;
    LinearMap a = random_matrix(n, n, rng);
    LinearMap b = random_matrix(n, n, rng);
    LinearMap r1, r2;
    double ts = seconds([&] { r1 = ref::matmul(a, b); });
    double tp = seconds([&] { r2 = matmul(a, b); });
    bool ok = r1 == r2;
    all_match = all_match && ok;
    row("rational matmul", ts, tp, ok);
  }
  {
    std::size_t n = quick ? 12 : 24;
    LinearMap a = random_matrix(n, n, rng);
    LinearMap b = random_matrix(n, n, rng);
    LinearMap r1, r2;
    double ts = seconds([&] { r1 = ref::kron(a, b); });
    double tp = seconds([&] { r2 = kron(a, b); });
    bool ok = r1 == r2;
    all_match = all_match && ok;
    row("kronecker product", ts, tp, ok);
  }
  {
    std::size_t n = quick ? 50 : 110;
    LinearMap a = random_matrix(n, n + 8, rng);
    RrefResult r1, r2;
    double ts = seconds([&] { r1 = ref::rref(a); });
    double tp = seconds([&] { r2 = rref(a); });
    bool ok = r1.mat == r2.mat && r1.pivots == r2.pivots;
    all_match = all_match && ok;
    row("row reduction", ts, tp, ok);
  }
  {
    // the sweep driver under a real verification workload
    std::size_t n = quick ? 8 : 18;
    WeakHopfAlgebra h =
        groupoid_algebra(cyclic_group(n), Field::rationals());
    Report r1, r2;
    double ts, tp;
    {
      // serial reference: the same tuple scan, one thread
      auto run = [&](Report& rep) {
        const std::size_t d = h.dim();
        sweep_check(rep, "associativity", {d, d, d}, [&](const auto& t) {
          Vec lhs = h.mul(h.base.alg.basis_product(t[0], t[1]), h.basis(t[2]));
          Vec rhs = h.mul(h.basis(t[0]), h.base.alg.basis_product(t[1], t[2]));
          return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
        });
      };
      auto serial_scan = [&](Report& rep) {
        const std::size_t d = h.dim();
        bool ok = true;
        for (std::size_t flat = 0; flat < d * d * d && ok; ++flat) {
          auto t = decode_tuple(flat, {d, d, d});
          Vec lhs = h.mul(h.base.alg.basis_product(t[0], t[1]), h.basis(t[2]));
          Vec rhs = h.mul(h.basis(t[0]), h.base.alg.basis_product(t[1], t[2]));
          ok = lhs == rhs;
        }
        rep.record("associativity", ok);
      };
      ts = seconds([&] { serial_scan(r1); });
      tp = seconds([&] { run(r2); });
    }
    bool ok = r1.all_passed() == r2.all_passed();
    all_match = all_match && ok;
    row("axiom sweep (group algebra)", ts, tp, ok);
  }
  {
    // end-to-end: full weak bialgebra suite, parallel kernels throughout
    std::size_t n = quick ? 6 : 14;
    WeakHopfAlgebra h =
        groupoid_algebra(cyclic_group(n), Field::rationals());
    Report rep;
    double t = seconds([&] {
      auto [r, built] = verify_weak_bialgebra(h.base.alg, h.base.coalg);
      rep = r;
    });
    std::printf("%-28s %10.3fs (%zu checks, %s)\n", "bialgebra suite e2e", t,
                rep.checks().size(), rep.all_passed() ? "pass" : "fail");
    all_match = all_match && rep.all_passed();
  }
  return all_match ? 0 : 1;
}
