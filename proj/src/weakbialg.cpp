#include "wha/weakbialg.hpp"

namespace wha {

WeakBialgebra WeakBialgebra::build(AlgebraData a, CoalgebraData c) {
  if (a.dim != c.dim) {
    throw Error(Error::Kind::DimMismatch,
                "algebra and coalgebra dimensions differ");
  }
  WeakBialgebra h;
  h.alg = std::move(a);
  h.coalg = std::move(c);
  const std::size_t n = h.alg.dim;
  const Field& f = h.alg.field;

  h.delta_unit = h.coalg.comult.apply(h.alg.unit);

  h.eps_pair = LinearMap(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h.eps_pair.at(i, j) = h.coalg.counit.dot(h.alg.basis_product(i, j));

  auto w = [&](std::size_t a_, std::size_t b_) -> const Scalar& {
    return h.delta_unit[a_ * n + b_];
  };

  h.eps_t = LinearMap(f, n, n);
  h.eps_s = LinearMap(f, n, n);
  h.eps_t_bar = LinearMap(f, n, n);
  h.eps_s_bar = LinearMap(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar t = Scalar::zero(f), s = Scalar::zero(f);
      Scalar tb = Scalar::zero(f), sb = Scalar::zero(f);
      for (std::size_t k = 0; k < n; ++k) {
        // eps_t(e_j) = eps(1_(1) e_j) 1_(2)
        if (!w(k, i).is_zero()) {
          t += w(k, i) * h.eps_pair.at(k, j);   // coeff of e_i
          tb += w(k, i) * h.eps_pair.at(j, k);  // eps(e_j 1_(1)) 1_(2)
        }
        // eps_s(e_j) = 1_(1) eps(e_j 1_(2))
        if (!w(i, k).is_zero()) {
          s += w(i, k) * h.eps_pair.at(j, k);
          sb += w(i, k) * h.eps_pair.at(k, j);  // eps(1_(2) e_j) 1_(1)
        }
      }
      h.eps_t.at(i, j) = t;
      h.eps_s.at(i, j) = s;
      h.eps_t_bar.at(i, j) = tb;
      h.eps_s_bar.at(i, j) = sb;
    }
  }

  h.target_space = Subspace::image(h.eps_t);
  h.source_space = Subspace::image(h.eps_s);

  Tensor du = h.delta_unit_tensor();
  h.sep_idem_t = du.apply(h.eps_t, 0, 1, {n}).as_vec();
  h.sep_idem_s = du.apply(h.eps_s, 1, 1, {n}).as_vec();
  return h;
}

ModuleData WeakBialgebra::target_module() const {
  const std::size_t r = target_space.dim();
  ModuleData m{Side::Left, r, {}};
  for (std::size_t hh = 0; hh < dim(); ++hh) {
    LinearMap a(field(), r, r);
    for (std::size_t c = 0; c < r; ++c) {
      Vec z = target_space.basis_vector(c);
      Vec img = eps_t.apply(mul(basis(hh), z));
      auto coords = target_space.coordinates(img);
      if (!coords) {
        throw Error(Error::Kind::Internal, "eps_t image escaped H_t");
      }
      for (std::size_t i = 0; i < r; ++i) a.at(i, c) = (*coords)[i];
    }
    m.act.push_back(std::move(a));
  }
  return m;
}

ModuleData WeakBialgebra::source_module() const {
  const std::size_t r = source_space.dim();
  ModuleData m{Side::Right, r, {}};
  for (std::size_t hh = 0; hh < dim(); ++hh) {
    LinearMap a(field(), r, r);
    for (std::size_t c = 0; c < r; ++c) {
      Vec y = source_space.basis_vector(c);
      Vec img = eps_s.apply(mul(y, basis(hh)));
      auto coords = source_space.coordinates(img);
      if (!coords) {
        throw Error(Error::Kind::Internal, "eps_s image escaped H_s");
      }
      for (std::size_t i = 0; i < r; ++i) a.at(i, c) = (*coords)[i];
    }
    m.act.push_back(std::move(a));
  }
  return m;
}

CounitalData counital_data(const WeakBialgebra& h) {
  return CounitalData{h.eps_t,        h.eps_s,        h.eps_t_bar,
                      h.eps_s_bar,    h.target_space, h.source_space,
                      h.sep_idem_t,   h.sep_idem_s};
}

namespace {

// Subspace of H (x) H spanned by the products of two subspace bases.
Subspace pair_subspace(const Field& f, const Subspace& a, const Subspace& b) {
  std::vector<Vec> span;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      span.push_back(kron_vec(a.basis_vector(i), b.basis_vector(j)));
  return Subspace::from_span(f, a.ambient_dim() * b.ambient_dim(), span);
}

void counital_checks(Report& rep, const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();

  check_map_equal(rep, "counital.eps_t_idempotent",
                  matmul(h.eps_t, h.eps_t), h.eps_t);
  check_map_equal(rep, "counital.eps_s_idempotent",
                  matmul(h.eps_s, h.eps_s), h.eps_s);
  check_map_equal(rep, "counital.eps_t_bar_idempotent",
                  matmul(h.eps_t_bar, h.eps_t_bar), h.eps_t_bar);
  check_map_equal(rep, "counital.eps_s_bar_idempotent",
                  matmul(h.eps_s_bar, h.eps_s_bar), h.eps_s_bar);

  // h_(1) (x) eps_t(h_(2)) = 1_(1) h (x) 1_(2)
  sweep_check(rep, "counital.target_comult_slice", {n}, [&](const auto& t) {
    Tensor lhs = h.expand(h.basis_tensor(t[0]), 0).apply(h.eps_t, 1, 1, {n});
    Tensor rhs = h.delta_unit_tensor().apply(
        h.alg.right_mult(h.basis(t[0])), 0, 1, {n});
    return std::pair(lhs, rhs);
  });
  // eps_s(h_(1)) (x) h_(2) = 1_(1) (x) h 1_(2)
  sweep_check(rep, "counital.source_comult_slice", {n}, [&](const auto& t) {
    Tensor lhs = h.expand(h.basis_tensor(t[0]), 0).apply(h.eps_s, 0, 1, {n});
    Tensor rhs = h.delta_unit_tensor().apply(
        h.alg.left_mult(h.basis(t[0])), 1, 1, {n});
    return std::pair(lhs, rhs);
  });
  // h eps_t(g) = eps(h_(1) g) h_(2)
  sweep_check(rep, "counital.mult_into_target_eval", {n, n}, [&](const auto& t) {
    Vec lhs = h.mul(h.basis(t[0]), h.eps_t.apply(h.basis(t[1])));
    Vec cov(f, n);
    for (std::size_t a = 0; a < n; ++a) cov[a] = h.eps_pair.at(a, t[1]);
    Tensor rhs = h.expand(h.basis_tensor(t[0]), 0).pair_with(cov, 0);
    return std::pair(Tensor::from_vec(lhs), rhs);
  });
  // eps_s(g) h = h_(1) eps(g h_(2))
  sweep_check(rep, "counital.mult_into_source_eval", {n, n}, [&](const auto& t) {
    Vec lhs = h.mul(h.eps_s.apply(h.basis(t[1])), h.basis(t[0]));
    Vec cov(f, n);
    for (std::size_t b = 0; b < n; ++b) cov[b] = h.eps_pair.at(t[1], b);
    Tensor rhs = h.expand(h.basis_tensor(t[0]), 0).pair_with(cov, 1);
    return std::pair(Tensor::from_vec(lhs), rhs);
  });
  // eps(h eps_t(g)) = eps(h g) and eps(eps_s(g) h) = eps(g h)
  sweep_check(rep, "counital.counit_absorbs_target", {n, n}, [&](const auto& t) {
    Scalar lhs = h.eps(h.mul(h.basis(t[0]), h.eps_t.apply(h.basis(t[1]))));
    return std::pair(Tensor::scalar(lhs),
                     Tensor::scalar(h.eps_pair.at(t[0], t[1])));
  });
  sweep_check(rep, "counital.counit_absorbs_source", {n, n}, [&](const auto& t) {
    Scalar lhs = h.eps(h.mul(h.eps_s.apply(h.basis(t[1])), h.basis(t[0])));
    return std::pair(Tensor::scalar(lhs),
                     Tensor::scalar(h.eps_pair.at(t[1], t[0])));
  });

  // The two alternative descriptions of H_t and H_s: as fixed points of
  // the unit-twisted comultiplication and as pairings against Delta(1).
  {
    LinearMap delta_minus_left(f, n * n, n);
    LinearMap delta_minus_right(f, n * n, n);
    for (std::size_t j = 0; j < n; ++j) {
      Tensor l = h.delta_unit_tensor().apply(h.alg.right_mult(h.basis(j)), 0,
                                             1, {n});
      Tensor r =
          h.delta_unit_tensor().apply(h.alg.left_mult(h.basis(j)), 1, 1, {n});
      Vec dj = h.coalg.comult.column(j);
      for (std::size_t k = 0; k < n * n; ++k) {
        delta_minus_left.at(k, j) = dj[k] - l.coords()[k];
        delta_minus_right.at(k, j) = dj[k] - r.coords()[k];
      }
    }
    rep.record("counital.ht_fixed_point_description",
               Subspace::kernel(delta_minus_left) == h.target_space);
    rep.record("counital.hs_fixed_point_description",
               Subspace::kernel(delta_minus_right) == h.source_space);

    LinearMap w_mat(f, n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        w_mat.at(a, b) = h.delta_unit[a * n + b];
    rep.record("counital.ht_dual_description",
               Subspace::image(w_mat.transpose()) == h.target_space);
    rep.record("counital.hs_dual_description",
               Subspace::image(w_mat) == h.source_space);
  }

  // Target and source projections commute, elementwise and slicewise.
  sweep_check(rep, "counital.target_source_commute", {n, n}, [&](const auto& t) {
    Vec zt = h.eps_t.apply(h.basis(t[0]));
    Vec ys = h.eps_s.apply(h.basis(t[1]));
    return std::pair(Tensor::from_vec(h.mul(zt, ys)),
                     Tensor::from_vec(h.mul(ys, zt)));
  });
  sweep_check(rep, "counital.slice_projections_symmetric", {n}, [&](const auto& t) {
    Tensor d = h.expand(h.basis_tensor(t[0]), 0);
    Tensor lhs = d.apply(h.eps_s, 0, 1, {n}).apply(h.eps_t, 1, 1, {n});
    Tensor rhs = d.permute({1, 0}).apply(h.eps_s, 0, 1, {n}).apply(
        h.eps_t, 1, 1, {n});
    return std::pair(lhs, rhs);
  });

  rep.record("counital.eps_t_of_unit",
             h.eps_t.apply(h.alg.unit) == h.alg.unit);
  rep.record("counital.eps_s_of_unit",
             h.eps_s.apply(h.alg.unit) == h.alg.unit);

  // Projection multiplicativity and closure of the subalgebras.
  sweep_check(rep, "counital.target_projection_multiplicative", {n, n}, [&](const auto& t) {
    Vec a = h.eps_t.apply(h.basis(t[0]));
    Vec lhs = h.mul(a, h.eps_t.apply(h.basis(t[1])));
    Vec rhs = h.eps_t.apply(h.mul(a, h.basis(t[1])));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  sweep_check(rep, "counital.source_projection_multiplicative", {n, n}, [&](const auto& t) {
    Vec b = h.eps_s.apply(h.basis(t[1]));
    Vec lhs = h.mul(h.eps_s.apply(h.basis(t[0])), b);
    Vec rhs = h.eps_s.apply(h.mul(h.basis(t[0]), b));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  {
    bool ht_closed = true, hs_closed = true;
    for (std::size_t i = 0; i < h.target_space.dim() && ht_closed; ++i)
      for (std::size_t j = 0; j < h.target_space.dim() && ht_closed; ++j)
        ht_closed = h.target_space.contains(h.mul(
            h.target_space.basis_vector(i), h.target_space.basis_vector(j)));
    for (std::size_t i = 0; i < h.source_space.dim() && hs_closed; ++i)
      for (std::size_t j = 0; j < h.source_space.dim() && hs_closed; ++j)
        hs_closed = h.source_space.contains(h.mul(
            h.source_space.basis_vector(i), h.source_space.basis_vector(j)));
    rep.record("counital.ht_subalgebra", ht_closed);
    rep.record("counital.hs_subalgebra", hs_closed);
    rep.record("counital.ht_contains_unit",
               h.target_space.contains(h.alg.unit));
    rep.record("counital.hs_contains_unit",
               h.source_space.contains(h.alg.unit));
  }

  // Lemma: eps_s_bar is an anti-isomorphism H_t -> H_s with inverse eps_t,
  // and eps_t_bar an anti-isomorphism H_s -> H_t with inverse eps_s.
  {
    const Subspace& ht = h.target_space;
    const Subspace& hs = h.source_space;
    sweep_check(rep, "counital.antiiso_sbar_inverse_on_ht", {ht.dim()},
                [&](const auto& t) {
                  Vec z = ht.basis_vector(t[0]);
                  return std::pair(
                      Tensor::from_vec(h.eps_t.apply(h.eps_s_bar.apply(z))),
                      Tensor::from_vec(z));
                });
    sweep_check(rep, "counital.antiiso_sbar_inverse_on_hs", {hs.dim()},
                [&](const auto& t) {
                  Vec y = hs.basis_vector(t[0]);
                  return std::pair(
                      Tensor::from_vec(h.eps_s_bar.apply(h.eps_t.apply(y))),
                      Tensor::from_vec(y));
                });
    sweep_check(rep, "counital.antiiso_sbar_antimultiplicative",
                {ht.dim(), ht.dim()}, [&](const auto& t) {
                  Vec z1 = ht.basis_vector(t[0]), z2 = ht.basis_vector(t[1]);
                  Vec lhs = h.eps_s_bar.apply(h.mul(z1, z2));
                  Vec rhs = h.mul(h.eps_s_bar.apply(z2), h.eps_s_bar.apply(z1));
                  return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
                });
    sweep_check(rep, "counital.antiiso_tbar_inverse_on_hs", {hs.dim()},
                [&](const auto& t) {
                  Vec y = hs.basis_vector(t[0]);
                  return std::pair(
                      Tensor::from_vec(h.eps_s.apply(h.eps_t_bar.apply(y))),
                      Tensor::from_vec(y));
                });
    sweep_check(rep, "counital.antiiso_tbar_antimultiplicative",
                {hs.dim(), hs.dim()}, [&](const auto& t) {
                  Vec y1 = hs.basis_vector(t[0]), y2 = hs.basis_vector(t[1]);
                  Vec lhs = h.eps_t_bar.apply(h.mul(y1, y2));
                  Vec rhs = h.mul(h.eps_t_bar.apply(y2), h.eps_t_bar.apply(y1));
                  return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
                });
  }

  // Lemma: Delta(1) lies in H_s (x) H_t.
  rep.record(
      "structure.delta_unit_in_hs_ht",
      pair_subspace(f, h.source_space, h.target_space).contains(h.delta_unit));

  // Separability idempotents and Frobenius systems.
  {
    Tensor et({n, n}, h.sep_idem_t);
    Tensor es({n, n}, h.sep_idem_s);
    rep.record("frobenius.e_t_normalized",
               h.contract(et, 0).as_vec() == h.alg.unit);
    rep.record("frobenius.e_s_normalized",
               h.contract(es, 0).as_vec() == h.alg.unit);
    // second forms: e_t = 1_(2) (x) eps_t_bar(1_(1)), e_s = eps_s_bar(1_(2)) (x) 1_(1)
    Tensor du = h.delta_unit_tensor();
    rep.record("frobenius.e_t_second_form",
               et == du.apply(h.eps_t_bar, 0, 1, {n}).permute({1, 0}));
    rep.record("frobenius.e_s_second_form",
               es == du.apply(h.eps_s_bar, 1, 1, {n}).permute({1, 0}));
    // e_t, e_s land in H_t (x) H_t and H_s (x) H_s.
    rep.record("frobenius.e_t_in_ht_ht",
               pair_subspace(f, h.target_space, h.target_space)
                   .contains(h.sep_idem_t));
    rep.record("frobenius.e_s_in_hs_hs",
               pair_subspace(f, h.source_space, h.source_space)
                   .contains(h.sep_idem_s));

    const Subspace& ht = h.target_space;
    sweep_check(rep, "frobenius.e_t_casimir", {ht.dim()}, [&](const auto& t) {
      Vec z = ht.basis_vector(t[0]);
      Tensor lhs = et.apply(h.alg.left_mult(z), 0, 1, {n});
      Tensor rhs = et.apply(h.alg.right_mult(z), 1, 1, {n});
      return std::pair(lhs, rhs);
    });
    sweep_check(rep, "frobenius.e_t_system", {ht.dim()}, [&](const auto& t) {
      Vec z = ht.basis_vector(t[0]);
      Vec cov_l(f, n), cov_r(f, n);
      for (std::size_t a = 0; a < n; ++a) {
        cov_l[a] = h.eps(h.mul(z, h.basis(a)));
        cov_r[a] = h.eps(h.mul(h.basis(a), z));
      }
      Vec first = et.pair_with(cov_l, 0).as_vec();
      Vec second = et.pair_with(cov_r, 1).as_vec();
      Vec stacked(f, 2 * n), expect(f, 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        stacked[i] = first[i];
        stacked[n + i] = second[i];
        expect[i] = z[i];
        expect[n + i] = z[i];
      }
      return std::pair(Tensor::from_vec(stacked), Tensor::from_vec(expect));
    });
    const Subspace& hs = h.source_space;
    sweep_check(rep, "frobenius.e_s_casimir", {hs.dim()}, [&](const auto& t) {
      Vec y = hs.basis_vector(t[0]);
      Tensor lhs = es.apply(h.alg.left_mult(y), 0, 1, {n});
      Tensor rhs = es.apply(h.alg.right_mult(y), 1, 1, {n});
      return std::pair(lhs, rhs);
    });
    sweep_check(rep, "frobenius.e_s_system", {hs.dim()}, [&](const auto& t) {
      Vec y = hs.basis_vector(t[0]);
      Vec cov_l(f, n), cov_r(f, n);
      for (std::size_t a = 0; a < n; ++a) {
        cov_l[a] = h.eps(h.mul(y, h.basis(a)));
        cov_r[a] = h.eps(h.mul(h.basis(a), y));
      }
      Vec first = es.pair_with(cov_l, 0).as_vec();
      Vec second = es.pair_with(cov_r, 1).as_vec();
      Vec stacked(f, 2 * n), expect(f, 2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        stacked[i] = first[i];
        stacked[n + i] = second[i];
        expect[i] = y[i];
        expect[n + i] = y[i];
      }
      return std::pair(Tensor::from_vec(stacked), Tensor::from_vec(expect));
    });
  }
}

}  // namespace

std::pair<Report, std::optional<WeakBialgebra>> verify_weak_bialgebra(
    const AlgebraData& a, const CoalgebraData& c) {
  Report rep("weak_bialgebra");
  WeakBialgebra h = WeakBialgebra::build(a, c);
  const std::size_t n = h.dim();

  rep.merge("algebra", verify_algebra(a));
  rep.merge("coalgebra", verify_coalgebra(c));

  // Delta(h k) = Delta(h) Delta(k)
  sweep_check(rep, "bialgebra.delta_multiplicative", {n, n},
              [&](const auto& t) {
                Tensor lhs = Tensor::from_vec(h.alg.basis_product(t[0], t[1]))
                                 .apply(h.coalg.comult, 0, 1, {n, n});
                Tensor rhs = h.expand(h.basis_tensor(t[0]), 0)
                                 .tensor_with(h.expand(h.basis_tensor(t[1]), 0))
                                 .permute({0, 2, 1, 3});
                rhs = h.contract(rhs, 0);
                rhs = h.contract(rhs, 1);
                return std::pair(lhs, rhs);
              });

  // Weakened unit axiom: Delta^2(1) against both orderings of
  // (Delta(1) (x) 1)(1 (x) Delta(1)).
  {
    Tensor delta2_unit =
        h.expand(h.delta_unit_tensor(), 0);  // (Delta (x) id) Delta(1)
    Tensor two = h.delta_unit_tensor().tensor_with(h.delta_unit_tensor());
    Tensor lhs1 = h.contract(two, 1);                      // 1_(1) (x) 1_(2)1_(1') (x) 1_(2')
    Tensor lhs2 = h.contract(two.permute({0, 2, 1, 3}), 1);  // 1_(1) (x) 1_(1')1_(2) (x) 1_(2')
    rep.record("bialgebra.weak_comult_unit_left", delta2_unit == lhs1);
    rep.record("bialgebra.weak_comult_unit_right", delta2_unit == lhs2);
  }

  // Weakened counit axiom: eps(hkl) through both comultiplication slots.
  sweep_check(rep, "bialgebra.weak_counit_mult_left", {n, n, n}, [&](const auto& t) {
    Scalar lhs = h.eps(h.mul(h.alg.basis_product(t[0], t[1]), h.basis(t[2])));
    Vec dk = h.coalg.comult.column(t[1]);
    Scalar rhs = Scalar::zero(h.field());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Scalar& cxy = dk[x * n + y];
        if (!cxy.is_zero())
          rhs += cxy * h.eps_pair.at(t[0], x) * h.eps_pair.at(y, t[2]);
      }
    return std::pair(Tensor::scalar(lhs), Tensor::scalar(rhs));
  });
  sweep_check(rep, "bialgebra.weak_counit_mult_right", {n, n, n}, [&](const auto& t) {
    Scalar lhs = h.eps(h.mul(h.alg.basis_product(t[0], t[1]), h.basis(t[2])));
    Vec dk = h.coalg.comult.column(t[1]);
    Scalar rhs = Scalar::zero(h.field());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Scalar& cxy = dk[x * n + y];
        if (!cxy.is_zero())
          rhs += cxy * h.eps_pair.at(t[0], y) * h.eps_pair.at(x, t[2]);
      }
    return std::pair(Tensor::scalar(lhs), Tensor::scalar(rhs));
  });

  counital_checks(rep, h);

  if (!rep.all_passed()) return {rep, std::nullopt};
  return {rep, h};
}

TruncatedTensor truncated_tensor(const WeakBialgebra& h, const ModuleData& m,
                                 const ModuleData& n) {
  if (m.side != n.side) {
    throw Error(Error::Kind::DimMismatch,
                "truncated tensor of mixed-sided modules");
  }
  const std::size_t dim = h.dim();
  TruncatedTensor t;
  t.left_dim = m.dim;
  t.right_dim = n.dim;
  LinearMap p(h.field(), m.dim * n.dim, m.dim * n.dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const Scalar& c = h.delta_unit[a * dim + b];
      if (!c.is_zero()) p += kron(m.act[a], n.act[b]).scaled(c);
    }
  t.projector = std::move(p);
  t.image = Subspace::image(t.projector);
  t.inc = t.image.inclusion();
  t.ret = matmul(t.image.retraction(), t.projector);
  return t;
}

LinearMap diag_action(const WeakBialgebra& h, const ModuleData& m,
                      const ModuleData& n, const Vec& coeffs) {
  const std::size_t dim = h.dim();
  Vec d = h.coalg.comult.apply(coeffs);
  LinearMap out(h.field(), m.dim * n.dim, m.dim * n.dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const Scalar& c = d[a * dim + b];
      if (!c.is_zero()) out += kron(m.act[a], n.act[b]).scaled(c);
    }
  return out;
}

ModuleData diag_module(const WeakBialgebra& h, const ModuleData& m,
                       const ModuleData& n) {
  ModuleData d{m.side, m.dim * n.dim, {}};
  for (std::size_t i = 0; i < h.dim(); ++i)
    d.act.push_back(diag_action(h, m, n, h.basis(i)));
  return d;
}

LinearMap triple_projector(const WeakBialgebra& h, const ModuleData& m,
                           const ModuleData& n, const ModuleData& p) {
  const std::size_t dim = h.dim();
  Tensor d2 = h.expand(h.delta_unit_tensor(), 0);  // Delta^2(1)
  LinearMap out(h.field(), m.dim * n.dim * p.dim, m.dim * n.dim * p.dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      for (std::size_t c = 0; c < dim; ++c) {
        const Scalar& s = d2.coords()[(a * dim + b) * dim + c];
        if (!s.is_zero())
          out += kron(kron(m.act[a], n.act[b]), p.act[c]).scaled(s);
      }
  return out;
}

Report verify_truncated_tensor(const WeakBialgebra& h, const ModuleData& m,
                               const ModuleData& n) {
  Report rep("truncated_tensor");
  TruncatedTensor t = truncated_tensor(h, m, n);
  check_map_equal(rep, "projector_idempotent",
                  matmul(t.projector, t.projector), t.projector);
  sweep_check(rep, "projector_commutes_with_action", {h.dim()},
              [&](const auto& idx) {
                LinearMap d = diag_action(h, m, n, h.basis(idx[0]));
                return std::pair(flatten_map(matmul(d, t.projector)),
                                 flatten_map(matmul(t.projector, d)));
              });
  check_map_equal(rep, "inc_ret_identities", matmul(t.ret, t.inc),
                  LinearMap::identity(h.field(), t.dim()));
  check_map_equal(rep, "inc_ret_projector", matmul(t.inc, t.ret), t.projector);

  // associativity: both bracketings equal the Delta^2(1) projector
  LinearMap p3 = triple_projector(h, m, n, m);
  ModuleData mn = diag_module(h, m, n);
  ModuleData nm2 = diag_module(h, n, m);
  TruncatedTensor left = truncated_tensor(h, mn, m);
  TruncatedTensor right = truncated_tensor(h, m, nm2);
  check_map_equal(rep, "assoc_left_bracketing", left.projector, p3);
  check_map_equal(rep, "assoc_right_bracketing", right.projector, p3);
  return rep;
}

UnitConstraints unit_constraints(const WeakBialgebra& h, const ModuleData& m) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  ModuleData tm = h.target_module();
  const std::size_t r = tm.dim;

  UnitConstraints u{truncated_tensor(h, tm, m), truncated_tensor(h, m, tm),
                    LinearMap(f, m.dim, r * m.dim),
                    LinearMap(f, r * m.dim, m.dim),
                    LinearMap(f, m.dim, m.dim * r),
                    LinearMap(f, m.dim * r, m.dim)};

  // l: z (x) x |-> z.x, with z an echelon basis vector of H_t.
  for (std::size_t c = 0; c < r; ++c) {
    LinearMap zact = m.action_of(h.target_space.basis_vector(c));
    for (std::size_t j = 0; j < m.dim; ++j) {
      Vec col = zact.column(j);
      for (std::size_t i = 0; i < m.dim; ++i)
        u.l.at(i, c * m.dim + j) = col[i];
    }
  }
  // l_inv: x |-> eps_t(1_(1)) (x) 1_(2) x
  for (std::size_t j = 0; j < m.dim; ++j) {
    Vec col(f, r * m.dim);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& c = h.delta_unit[a * n + b];
        if (c.is_zero()) continue;
        auto z = h.target_space.coordinates(h.eps_t.apply(h.basis(a)));
        if (!z) throw Error(Error::Kind::Internal, "eps_t image escaped H_t");
        Vec mx = m.act[b].column(j);
        col += kron_vec(*z, mx).scaled(c);
      }
    for (std::size_t i = 0; i < r * m.dim; ++i) u.l_inv.at(i, j) = col[i];
  }
  // r: x (x) z |-> eps_s_bar(z) x
  for (std::size_t c = 0; c < r; ++c) {
    LinearMap zact =
        m.action_of(h.eps_s_bar.apply(h.target_space.basis_vector(c)));
    for (std::size_t j = 0; j < m.dim; ++j) {
      Vec col = zact.column(j);
      for (std::size_t i = 0; i < m.dim; ++i)
        u.r.at(i, j * r + c) = col[i];
    }
  }
  // r_inv: x |-> 1_(1) x (x) 1_(2), second factor in H_t coordinates
  for (std::size_t j = 0; j < m.dim; ++j) {
    Vec col(f, m.dim * r);
    for (std::size_t a = 0; a < n; ++a) {
      Vec slice(f, n);
      for (std::size_t b = 0; b < n; ++b) slice[b] = h.delta_unit[a * n + b];
      if (slice.is_zero()) continue;
      auto z = h.target_space.coordinates(slice);
      if (!z) throw Error(Error::Kind::Internal, "Delta(1) slice escaped H_t");
      col += kron_vec(m.act[a].column(j), *z);
    }
    for (std::size_t i = 0; i < m.dim * r; ++i) u.r_inv.at(i, j) = col[i];
  }
  return u;
}

Report verify_unit_constraints(const WeakBialgebra& h, const ModuleData& m) {
  Report rep("unit_constraints");
  UnitConstraints u = unit_constraints(h, m);
  ModuleData tm = h.target_module();
  LinearMap id_m = LinearMap::identity(h.field(), m.dim);

  check_map_equal(rep, "l_section", matmul(u.l, u.l_inv), id_m);
  check_map_equal_on(rep, "l_retraction", matmul(u.l_inv, u.l),
                     LinearMap::identity(h.field(), u.ht_m.ambient_dim()),
                     u.ht_m.projector);
  check_map_equal(rep, "r_section", matmul(u.r, u.r_inv), id_m);
  check_map_equal_on(rep, "r_retraction", matmul(u.r_inv, u.r),
                     LinearMap::identity(h.field(), u.m_ht.ambient_dim()),
                     u.m_ht.projector);
  sweep_check(rep, "l_h_linear", {h.dim()}, [&](const auto& t) {
    LinearMap d = diag_action(h, tm, m, h.basis(t[0]));
    LinearMap lhs = matmul(matmul(m.act[t[0]], u.l), u.ht_m.projector);
    LinearMap rhs = matmul(matmul(u.l, d), u.ht_m.projector);
    return std::pair(flatten_map(lhs), flatten_map(rhs));
  });
  sweep_check(rep, "r_h_linear", {h.dim()}, [&](const auto& t) {
    LinearMap d = diag_action(h, m, tm, h.basis(t[0]));
    LinearMap lhs = matmul(matmul(m.act[t[0]], u.r), u.m_ht.projector);
    LinearMap rhs = matmul(matmul(u.r, d), u.m_ht.projector);
    return std::pair(flatten_map(lhs), flatten_map(rhs));
  });
  check_map_equal(rep, "l_inv_lands_in_image",
                  matmul(u.ht_m.projector, u.l_inv), u.l_inv);
  check_map_equal(rep, "r_inv_lands_in_image",
                  matmul(u.m_ht.projector, u.r_inv), u.r_inv);
  return rep;
}

Report verify_triangle(const WeakBialgebra& h, const ModuleData& m,
                       const ModuleData& n) {
  Report rep("triangle");
  ModuleData tm = h.target_module();
  UnitConstraints um = unit_constraints(h, m);
  UnitConstraints un = unit_constraints(h, n);
  LinearMap p3 = triple_projector(h, m, tm, n);
  LinearMap lhs = kron(um.r, LinearMap::identity(h.field(), n.dim));
  LinearMap rhs = kron(LinearMap::identity(h.field(), m.dim), un.l);
  check_map_equal_on(rep, "triangle_coherence", lhs, rhs, p3);
  return rep;
}

HtTensorComparison tensor_over_ht(const WeakBialgebra& h, const ModuleData& m,
                                  const ModuleData& n) {
  const Field& f = h.field();
  const std::size_t amb = m.dim * n.dim;
  std::vector<Vec> rels;
  for (std::size_t k = 0; k < h.target_space.dim(); ++k) {
    Vec z = h.target_space.basis_vector(k);
    LinearMap mz = m.action_of(h.eps_s_bar.apply(z));  // right H_t action
    LinearMap nz = n.action_of(z);
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < n.dim; ++j) {
        Vec rel = kron_vec(mz.column(i), Vec::basis(f, n.dim, j)) -
                  kron_vec(Vec::basis(f, m.dim, i), nz.column(j));
        if (!rel.is_zero()) rels.push_back(rel);
      }
  }
  Subspace relspan = Subspace::from_span(f, amb, rels);
  HtTensorComparison cmp{Quotient(f, amb, relspan),
                         truncated_tensor(h, m, n), LinearMap(), LinearMap()};
  cmp.pibar = matmul(cmp.trunc.ret, cmp.quotient.section());
  cmp.pibar_inv = matmul(cmp.quotient.projection(), cmp.trunc.inc);
  return cmp;
}

Report verify_tensor_over_ht(const WeakBialgebra& h, const ModuleData& m,
                             const ModuleData& n) {
  Report rep("tensor_over_ht");
  HtTensorComparison cmp = tensor_over_ht(h, m, n);
  const Field& f = h.field();

  // pi kills the relations, so pibar is well defined.
  bool killed = true;
  for (std::size_t i = 0; i < cmp.quotient.relations().dim(); ++i) {
    if (!cmp.trunc.projector.apply(cmp.quotient.relations().basis_vector(i))
             .is_zero()) {
      killed = false;
      break;
    }
  }
  rep.record("relations_killed_by_projector", killed);
  rep.record("dims_match", cmp.quotient.dim() == cmp.trunc.dim());
  check_map_equal(rep, "pibar_left_inverse",
                  matmul(cmp.pibar_inv, cmp.pibar),
                  LinearMap::identity(f, cmp.quotient.dim()));
  check_map_equal(rep, "pibar_right_inverse",
                  matmul(cmp.pibar, cmp.pibar_inv),
                  LinearMap::identity(f, cmp.trunc.dim()));
  sweep_check(rep, "pibar_ht_linear", {h.target_space.dim()},
              [&](const auto& t) {
                Vec z = h.target_space.basis_vector(t[0]);
                LinearMap zq = matmul(
                    cmp.quotient.projection(),
                    matmul(kron(m.action_of(z),
                                LinearMap::identity(f, n.dim)),
                           cmp.quotient.section()));
                LinearMap zt = matmul(
                    cmp.trunc.ret,
                    matmul(diag_action(h, m, n, z), cmp.trunc.inc));
                return std::pair(flatten_map(matmul(cmp.pibar, zq)),
                                 flatten_map(matmul(zt, cmp.pibar)));
              });
  return rep;
}

}  // namespace wha
