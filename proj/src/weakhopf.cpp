#include "wha/weakhopf.hpp"

namespace wha {

LinearMap convolution(const WeakBialgebra& h, const LinearMap& f,
                      const LinearMap& g) {
  return matmul(h.alg.mult, matmul(kron(f, g), h.coalg.comult));
}

std::optional<LinearMap> inverse_map(const LinearMap& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const Field& f = m.field();
  LinearMap aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(f);
  }
  RrefResult r = rref(aug);
  if (r.rank != n || r.pivots[n - 1] != n - 1) return std::nullopt;
  LinearMap inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

AntipodeSolution solve_antipode(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  // Unknowns S(i, a) at flat index i*n + a; S(e_a) = sum_i S(i,a) e_i.
  // Stacked linear conditions: the two convolution axioms S*id = eps_s and
  // id*S = eps_t, plus the derived identities S*eps_t = S and eps_s*S = S,
  // which are linear in S as well and cut the solution set down to the
  // genuine antipode on e.g. groupoid algebras.
  LinearMap sys(f, 4 * n * n, n * n);
  Vec rhs(f, 4 * n * n);
  const Scalar one = Scalar::one(f);
  for (std::size_t j = 0; j < n; ++j) {
    Vec dj = h.coalg.comult.column(j);
    Vec es = h.eps_s.column(j);
    Vec et = h.eps_t.column(j);
    for (std::size_t r = 0; r < n; ++r) {
      rhs[j * n + r] = es[r];
      rhs[n * n + j * n + r] = et[r];
      sys.at(2 * n * n + j * n + r, r * n + j) -= one;  // -S in S*eps_t = S
      sys.at(3 * n * n + j * n + r, r * n + j) -= one;  // -S in eps_s*S = S
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = dj[a * n + b];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i) {
          // S*id: S(h_(1)) h_(2) -> coefficient of S(i,a) is (e_i e_b)_r
          Vec ib = h.alg.basis_product(i, b);
          Vec ai = h.alg.basis_product(a, i);
          Vec i_et = h.alg.mul(h.basis(i), h.eps_t.apply(h.basis(b)));
          Vec es_i = h.alg.mul(h.eps_s.apply(h.basis(a)), h.basis(i));
          for (std::size_t r = 0; r < n; ++r) {
            if (!ib[r].is_zero()) sys.at(j * n + r, i * n + a) += c * ib[r];
            if (!ai[r].is_zero())
              sys.at(n * n + j * n + r, i * n + b) += c * ai[r];
            if (!i_et[r].is_zero())
              sys.at(2 * n * n + j * n + r, i * n + a) += c * i_et[r];
            if (!es_i[r].is_zero())
              sys.at(3 * n * n + j * n + r, i * n + b) += c * es_i[r];
          }
        }
      }
  }

  SolutionSet sol = solve_linear(sys, rhs);
  AntipodeSolution out;
  if (sol.empty()) {
    out.status = AntipodeSolution::Status::NotFound;
    out.detail = "the linear convolution conditions are inconsistent";
    return out;
  }
  auto to_map = [&](const Vec& x) {
    LinearMap s(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < n; ++a) s.at(i, a) = x[i * n + a];
    return s;
  };
  if (sol.kind == SolutionSet::Kind::Affine) {
    out.status = AntipodeSolution::Status::Ambiguous;
    out.particular = to_map(*sol.particular);
    out.freedom = sol.kernel;
    out.detail = "linear subsystem underdetermined (" +
                 std::to_string(sol.kernel.dim()) + " free parameters)";
    return out;
  }
  LinearMap s = to_map(*sol.particular);
  if (convolution(h, convolution(h, s, LinearMap::identity(f, n)), s) != s) {
    out.status = AntipodeSolution::Status::NotFound;
    out.detail = "unique linear solution violates S*id*S = S";
    return out;
  }
  auto inv = inverse_map(s);
  if (!inv) {
    out.status = AntipodeSolution::Status::NotBijective;
    out.particular = s;
    out.detail = "antipode solution is not bijective";
    return out;
  }
  out.status = AntipodeSolution::Status::Found;
  out.antipode = s;
  out.antipode_inv = *inv;
  return out;
}

Report verify_weak_hopf(const WeakHopfAlgebra& hh) {
  Report rep("weak_hopf");
  const WeakBialgebra& h = hh.base;
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const LinearMap& s = hh.antipode;
  const LinearMap& si = hh.antipode_inv;
  LinearMap id = LinearMap::identity(f, n);
  Tensor w = h.delta_unit_tensor();

  check_map_equal(rep, "antipode.left_convolution", convolution(h, s, id), h.eps_s);
  check_map_equal(rep, "antipode.right_convolution", convolution(h, id, s), h.eps_t);
  check_map_equal(rep, "antipode.double_convolution",
                  convolution(h, convolution(h, s, id), s), s);
  check_map_equal(rep, "antipode.source_convolution_absorbs", convolution(h, h.eps_s, s), s);
  check_map_equal(rep, "antipode.target_convolution_absorbs", convolution(h, s, h.eps_t), s);
  check_map_equal(rep, "antipode.inverse_left", matmul(si, s), id);
  check_map_equal(rep, "antipode.inverse_right", matmul(s, si), id);

  // Lemma: S is an anti-algebra and anti-coalgebra morphism.
  sweep_check(rep, "antipode.anti_algebra", {n, n}, [&](const auto& t) {
    Vec lhs = s.apply(h.alg.basis_product(t[0], t[1]));
    Vec rhs = h.mul(s.apply(h.basis(t[1])), s.apply(h.basis(t[0])));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  rep.record("antipode.fixes_unit", s.apply(h.alg.unit) == h.alg.unit);
  sweep_check(rep, "antipode.anti_coalgebra", {n}, [&](const auto& t) {
    Tensor lhs = Tensor::from_vec(s.apply(h.basis(t[0])));
    lhs = h.expand(lhs, 0);
    Tensor rhs = h.expand(h.basis_tensor(t[0]), 0)
                     .permute({1, 0})
                     .apply(s, 0, 1, {n})
                     .apply(s, 1, 1, {n});
    return std::pair(lhs, rhs);
  });
  rep.record("antipode.preserves_counit",
             matmul(LinearMap::from_rows(f, n, {h.coalg.counit}), s) ==
                 LinearMap::from_rows(f, n, {h.coalg.counit}));

  // eps_t(hg) = eps_t(h eps_t(g)) = h_(1) eps_t(g) S(h_(2)), and dually.
  sweep_check(rep, "antipode.target_of_product", {n, n}, [&](const auto& t) {
    Vec lhs = h.eps_t.apply(h.alg.basis_product(t[0], t[1]));
    Vec rhs = h.eps_t.apply(
        h.mul(h.basis(t[0]), h.eps_t.apply(h.basis(t[1]))));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  sweep_check(rep, "antipode.target_conjugation", {n, n}, [&](const auto& t) {
    Vec lhs = h.eps_t.apply(h.alg.basis_product(t[0], t[1]));
    Tensor rhs = h.expand(h.basis_tensor(t[0]), 0)
                     .apply(s, 1, 1, {n})
                     .tensor_with(Tensor::from_vec(
                         h.eps_t.apply(h.basis(t[1]))))
                     .permute({0, 2, 1});
    rhs = h.contract(h.contract(rhs, 0), 0);
    return std::pair(Tensor::from_vec(lhs), rhs);
  });
  sweep_check(rep, "antipode.source_of_product", {n, n}, [&](const auto& t) {
    Vec lhs = h.eps_s.apply(h.alg.basis_product(t[0], t[1]));
    Vec rhs = h.eps_s.apply(
        h.mul(h.eps_s.apply(h.basis(t[0])), h.basis(t[1])));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  sweep_check(rep, "antipode.source_conjugation", {n, n}, [&](const auto& t) {
    Vec lhs = h.eps_s.apply(h.alg.basis_product(t[0], t[1]));
    // S(g_(1)) eps_s(h) g_(2)
    Tensor rhs = h.expand(h.basis_tensor(t[1]), 0)
                     .apply(s, 0, 1, {n})
                     .tensor_with(Tensor::from_vec(
                         h.eps_s.apply(h.basis(t[0]))))
                     .permute({0, 2, 1});
    rhs = h.contract(h.contract(rhs, 0), 0);
    return std::pair(Tensor::from_vec(lhs), rhs);
  });

  // Comultiplication of the projections through the antipode.
  sweep_check(rep, "antipode.comult_of_target", {n}, [&](const auto& t) {
    Tensor lhs =
        h.expand(Tensor::from_vec(h.eps_t.apply(h.basis(t[0]))), 0);
    Tensor d3 = h.expand(h.expand(h.basis_tensor(t[0]), 0), 1);
    Tensor rhs = d3.apply(s, 2, 1, {n})
                     .apply(h.eps_t, 1, 1, {n})
                     .permute({0, 2, 1});
    rhs = h.contract(rhs, 0);
    return std::pair(lhs, rhs);
  });
  sweep_check(rep, "antipode.comult_of_source", {n}, [&](const auto& t) {
    Tensor lhs =
        h.expand(Tensor::from_vec(h.eps_s.apply(h.basis(t[0]))), 0);
    Tensor d3 = h.expand(h.expand(h.basis_tensor(t[0]), 0), 1);
    // eps_s(h_(2)) (x) S(h_(1)) h_(3)
    Tensor rhs = d3.apply(s, 0, 1, {n})
                     .apply(h.eps_s, 1, 1, {n})
                     .permute({1, 0, 2});
    rhs = h.contract(rhs, 1);
    return std::pair(lhs, rhs);
  });

  // The counital projections written through the antipode.
  sweep_check(rep, "antipode.target_via_antipode_pairing", {n}, [&](const auto& t) {
    Vec lhs = h.eps_t.column(t[0]);
    Vec cov(f, n);
    Vec sh = s.apply(h.basis(t[0]));
    for (std::size_t a = 0; a < n; ++a) cov[a] = h.eps(h.mul(sh, h.basis(a)));
    return std::pair(Tensor::from_vec(lhs), w.pair_with(cov, 0));
  });
  sweep_check(rep, "antipode.target_via_antipode_unit", {n}, [&](const auto& t) {
    Vec lhs = h.eps_t.column(t[0]);
    Vec cov(f, n);
    for (std::size_t b = 0; b < n; ++b) cov[b] = h.eps_pair.at(b, t[0]);
    Tensor rhs = w.apply(s, 0, 1, {n}).pair_with(cov, 1);
    return std::pair(Tensor::from_vec(lhs), rhs);
  });
  check_map_equal(rep, "antipode.target_is_antipode_of_source_bar", matmul(s, h.eps_s_bar), h.eps_t);
  sweep_check(rep, "antipode.source_via_antipode_pairing", {n}, [&](const auto& t) {
    Vec lhs = h.eps_s.column(t[0]);
    Vec cov(f, n);
    Vec sh = s.apply(h.basis(t[0]));
    for (std::size_t b = 0; b < n; ++b) cov[b] = h.eps(h.mul(h.basis(b), sh));
    return std::pair(Tensor::from_vec(lhs), w.pair_with(cov, 1));
  });
  sweep_check(rep, "antipode.source_via_antipode_unit", {n}, [&](const auto& t) {
    Vec lhs = h.eps_s.column(t[0]);
    Vec cov(f, n);
    for (std::size_t a = 0; a < n; ++a) cov[a] = h.eps_pair.at(t[0], a);
    Tensor rhs = w.apply(s, 1, 1, {n}).pair_with(cov, 0);
    return std::pair(Tensor::from_vec(lhs), rhs);
  });
  check_map_equal(rep, "antipode.source_is_antipode_of_target_bar", matmul(s, h.eps_t_bar), h.eps_s);

  // Slice forms: eps_t(h_(1)) (x) h_(2) = S(1_(1)) (x) 1_(2) h, and dually.
  sweep_check(rep, "antipode.target_slice_via_unit", {n}, [&](const auto& t) {
    Tensor lhs = h.expand(h.basis_tensor(t[0]), 0).apply(h.eps_t, 0, 1, {n});
    Tensor rhs = w.apply(s, 0, 1, {n})
                     .apply(h.alg.right_mult(h.basis(t[0])), 1, 1, {n});
    return std::pair(lhs, rhs);
  });
  sweep_check(rep, "antipode.source_slice_via_unit", {n}, [&](const auto& t) {
    Tensor lhs = h.expand(h.basis_tensor(t[0]), 0).apply(h.eps_s, 1, 1, {n});
    Tensor rhs = w.apply(h.alg.left_mult(h.basis(t[0])), 0, 1, {n})
                     .apply(s, 1, 1, {n});
    return std::pair(lhs, rhs);
  });

  // Composites of the antipode with the counital projections.
  check_map_equal(rep, "antipode.target_of_antipode", matmul(h.eps_t, s),
                  matmul(h.eps_t, h.eps_s));
  check_map_equal(rep, "antipode.target_source_collapse", matmul(h.eps_t, h.eps_s),
                  matmul(s, h.eps_s));
  check_map_equal(rep, "antipode.source_of_antipode", matmul(h.eps_s, s),
                  matmul(h.eps_s, h.eps_t));
  check_map_equal(rep, "antipode.source_target_collapse", matmul(h.eps_s, h.eps_t),
                  matmul(s, h.eps_t));

  // Restrictions of S to the subalgebras.
  sweep_check(rep, "antipode.restriction_to_target", {h.target_space.dim()},
              [&](const auto& t) {
                Vec z = h.target_space.basis_vector(t[0]);
                return std::pair(Tensor::from_vec(s.apply(z)),
                                 Tensor::from_vec(h.eps_s.apply(z)));
              });
  sweep_check(rep, "antipode.inverse_restriction_to_source", {h.source_space.dim()},
              [&](const auto& t) {
                Vec y = h.source_space.basis_vector(t[0]);
                return std::pair(Tensor::from_vec(si.apply(y)),
                                 Tensor::from_vec(h.eps_t_bar.apply(y)));
              });
  {
    std::vector<Vec> imgs;
    for (std::size_t i = 0; i < h.target_space.dim(); ++i)
      imgs.push_back(s.apply(h.target_space.basis_vector(i)));
    rep.record("antipode.maps_target_onto_source",
               Subspace::from_span(f, n, imgs) == h.source_space);
  }

  // Separability idempotents through the antipode.
  rep.record("antipode.target_casimir",
             Tensor({n, n}, h.sep_idem_t) == w.apply(s, 0, 1, {n}));
  rep.record("antipode.source_casimir",
             Tensor({n, n}, h.sep_idem_s) == w.apply(s, 1, 1, {n}));

  // Casimir/unit slide identities for target and source elements.
  sweep_check(rep, "antipode.unit_slide_inverse", {h.target_space.dim()}, [&](const auto& t) {
    Vec z = h.target_space.basis_vector(t[0]);
    Tensor lhs = w.apply(h.alg.right_mult(si.apply(z)), 0, 1, {n});
    Tensor rhs = w.apply(h.alg.right_mult(z), 1, 1, {n});
    return std::pair(lhs, rhs);
  });
  sweep_check(rep, "antipode.casimir_target_twist", {h.target_space.dim()}, [&](const auto& t) {
    Vec z = h.target_space.basis_vector(t[0]);
    Tensor et = w.apply(s, 0, 1, {n});
    Tensor lhs = et.apply(h.alg.left_mult(z), 0, 1, {n});
    Tensor rhs = et.apply(h.alg.right_mult(z), 1, 1, {n});
    return std::pair(lhs, rhs);
  });
  sweep_check(rep, "antipode.unit_slide_source", {h.source_space.dim()}, [&](const auto& t) {
    Vec y = h.source_space.basis_vector(t[0]);
    Tensor lhs = w.apply(h.alg.left_mult(y), 0, 1, {n});
    Tensor rhs = w.apply(h.alg.left_mult(si.apply(y)), 1, 1, {n});
    return std::pair(lhs, rhs);
  });

  return rep;
}

WeakHopfAlgebra dual_weak_hopf(const WeakHopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  const WeakBialgebra& b = h.base;

  AlgebraData alg{f, n, LinearMap(f, n, n * n), b.coalg.counit};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t j = 0; j < n; ++j)
        alg.mult.at(j, a * n + c) = b.coalg.comult.at(a * n + c, j);

  CoalgebraData coalg{f, n, LinearMap(f, n * n, n), b.alg.unit};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t j = 0; j < n; ++j)
        coalg.comult.at(a * n + c, j) = b.alg.mult.at(j, a * n + c);

  WeakHopfAlgebra d;
  d.base = WeakBialgebra::build(std::move(alg), std::move(coalg));
  d.antipode = h.antipode.transpose();
  d.antipode_inv = h.antipode_inv.transpose();
  return d;
}

Vec hit_action(const WeakHopfAlgebra& h, const Vec& hv, const Vec& hstar,
               const Vec& kv) {
  const std::size_t n = h.dim();
  Vec out(h.field(), n);
  for (std::size_t l = 0; l < n; ++l) {
    out[l] = hstar.dot(h.mul(h.mul(kv, h.basis(l)), hv));
  }
  return out;
}

WeakHopfAlgebra opposite(const WeakHopfAlgebra& h) {
  WeakHopfAlgebra o;
  o.base = WeakBialgebra::build(algebra_opposite(h.base.alg), h.base.coalg);
  o.antipode = h.antipode_inv;
  o.antipode_inv = h.antipode;
  return o;
}

WeakHopfAlgebra sweedler_algebra(const Field& f) {
  const std::size_t n = 4;  // basis 1, g, x, gx
  auto q = [&](long v) { return Scalar::of_int(v, f); };
  AlgebraData alg{f, n, LinearMap(f, n, n * n), Vec::basis(f, n, 0)};
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    alg.mult.at(k, i * n + j) = q(c);
  };
  for (std::size_t j = 0; j < n; ++j) set(0, j, j, 1);
  set(1, 0, 1, 1);   // g 1 = g
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 0, 2, 1);   // x 1 = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 0, 3, 1);   // gx 1 = gx
  set(3, 1, 2, -1);  // gx g = -x

  CoalgebraData co{f, n, LinearMap(f, n * n, n), Vec(f, n)};
  auto cset = [&](std::size_t j, std::size_t a, std::size_t b, long c) {
    co.comult.at(a * n + b, j) = q(c);
  };
  cset(0, 0, 0, 1);  // 1 grouplike
  cset(1, 1, 1, 1);  // g grouplike
  cset(2, 2, 0, 1);  // Delta(x) = x (x) 1 + g (x) x
  cset(2, 1, 2, 1);
  cset(3, 3, 1, 1);  // Delta(gx) = gx (x) g + 1 (x) gx
  cset(3, 0, 3, 1);
  co.counit[0] = q(1);
  co.counit[1] = q(1);

  WeakHopfAlgebra h;
  h.base = WeakBialgebra::build(std::move(alg), std::move(co));
  h.antipode = LinearMap(f, n, n);
  h.antipode.at(0, 0) = q(1);
  h.antipode.at(1, 1) = q(1);
  h.antipode.at(3, 2) = q(-1);  // S(x) = -gx
  h.antipode.at(2, 3) = q(1);   // S(gx) = x
  auto inv = inverse_map(h.antipode);
  h.antipode_inv = *inv;
  return h;
}

WeakHopfAlgebra hopf_tensor(const WeakHopfAlgebra& a,
                            const WeakHopfAlgebra& b) {
  WeakHopfAlgebra t;
  t.base = WeakBialgebra::build(algebra_tensor(a.base.alg, b.base.alg),
                                coalgebra_tensor(a.base.coalg, b.base.coalg));
  t.antipode = kron(a.antipode, b.antipode);
  t.antipode_inv = kron(a.antipode_inv, b.antipode_inv);
  return t;
}

}  // namespace wha
