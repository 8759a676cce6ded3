#include "wha/entwining.hpp"

namespace wha {

Vec PreunitalAlgebra::mul(const Vec& x, const Vec& y) const {
  AlgebraData a{field, dim, mult, Vec(field, dim)};
  return a.mul(x, y);
}

std::pair<Report, PreunitalAlgebra> make_preunital(const Field& f,
                                                   const LinearMap& mult,
                                                   const Vec& preunit) {
  Report rep("preunital");
  PreunitalAlgebra pa{f, preunit.size(), mult, preunit, LinearMap(), Subspace(),
                      LinearMap(), LinearMap()};
  const std::size_t n = pa.dim;
  AlgebraData amb{f, n, mult, Vec(f, n)};  // unit slot unused

  Vec e2 = amb.mul(preunit, preunit);
  sweep_check(rep, "preunit_law", {n}, [&](const auto& t) {
    Vec a = Vec::basis(f, n, t[0]);
    Vec ea = amb.mul(preunit, a);
    Vec ae = amb.mul(a, preunit);
    Vec ae2 = amb.mul(a, e2);
    Vec lhs(f, 2 * n), rhs(f, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = ea[i];
      lhs[n + i] = ae[i];
      rhs[i] = ae2[i];
      rhs[n + i] = ae2[i];
    }
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });

  pa.p = amb.right_mult(preunit);
  pa.image = Subspace::image(pa.p);
  pa.inc = pa.image.inclusion();
  pa.ret = matmul(pa.image.retraction(), pa.p);

  check_map_equal(rep, "p_idempotent", matmul(pa.p, pa.p), pa.p);
  sweep_check(rep, "p_multiplicative", {n, n}, [&](const auto& t) {
    Vec lhs = pa.p.apply(amb.basis_product(t[0], t[1]));
    Vec rhs = amb.mul(pa.p.column(t[0]), pa.p.column(t[1]));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });

  const std::size_t r = pa.image.dim();
  sweep_check(rep, "image_unital", {r}, [&](const auto& t) {
    Vec x = pa.image.basis_vector(t[0]);
    Vec lhs(f, 2 * n), rhs(f, 2 * n);
    Vec ex = amb.mul(e2, x), xe = amb.mul(x, e2);
    for (std::size_t i = 0; i < n; ++i) {
      lhs[i] = ex[i];
      lhs[n + i] = xe[i];
      rhs[i] = x[i];
      rhs[n + i] = x[i];
    }
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  sweep_check(rep, "image_associative", {r, r, r}, [&](const auto& t) {
    Vec x = pa.image.basis_vector(t[0]);
    Vec y = pa.image.basis_vector(t[1]);
    Vec z = pa.image.basis_vector(t[2]);
    return std::pair(Tensor::from_vec(amb.mul(amb.mul(x, y), z)),
                     Tensor::from_vec(amb.mul(x, amb.mul(y, z))));
  });
  sweep_check(rep, "image_closed", {r, r}, [&](const auto& t) {
    Vec prod = amb.mul(pa.image.basis_vector(t[0]), pa.image.basis_vector(t[1]));
    Vec res = pa.image.reduce(prod);
    return std::pair(Tensor::from_vec(res), Tensor::from_vec(Vec(f, n)));
  });
  return {rep, pa};
}

UnitalQuotient preunit_quotient(const PreunitalAlgebra& pa) {
  const Field& f = pa.field;
  const std::size_t r = pa.image.dim();
  AlgebraData alg{f, r, LinearMap(f, r, r * r),
                  pa.ret.apply(pa.mul(pa.preunit, pa.preunit))};
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t d = 0; d < r; ++d) {
      Vec prod = pa.ret.apply(
          pa.mul(pa.inc.column(c), pa.inc.column(d)));
      for (std::size_t i = 0; i < r; ++i) alg.mult.at(i, c * r + d) = prod[i];
    }
  return UnitalQuotient{std::move(alg), pa.ret, pa.inc};
}

Report verify_preunit_quotient(const PreunitalAlgebra& pa) {
  Report rep("preunit_quotient");
  const Field& f = pa.field;
  const std::size_t n = pa.dim;
  Subspace ker = Subspace::kernel(pa.p);
  rep.record("rank_nullity", ker.dim() + pa.image.dim() == n);

  sweep_check(rep, "kernel_left_ideal", {n, ker.dim()}, [&](const auto& t) {
    Vec prod = pa.mul(Vec::basis(f, n, t[0]), ker.basis_vector(t[1]));
    return std::pair(Tensor::from_vec(pa.p.apply(prod)),
                     Tensor::from_vec(Vec(f, n)));
  });
  sweep_check(rep, "kernel_right_ideal", {n, ker.dim()}, [&](const auto& t) {
    Vec prod = pa.mul(ker.basis_vector(t[1]), Vec::basis(f, n, t[0]));
    return std::pair(Tensor::from_vec(pa.p.apply(prod)),
                     Tensor::from_vec(Vec(f, n)));
  });

  UnitalQuotient q = preunit_quotient(pa);
  rep.merge("quotient", verify_algebra(q.algebra));
  // the quotient map is multiplicative
  sweep_check(rep, "projection_multiplicative", {n, n}, [&](const auto& t) {
    Vec lhs = q.project.apply(
        pa.mul(Vec::basis(f, n, t[0]), Vec::basis(f, n, t[1])));
    Vec rhs = q.algebra.mul(q.project.apply(Vec::basis(f, n, t[0])),
                            q.project.apply(Vec::basis(f, n, t[1])));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  check_map_equal(rep, "section_retraction", matmul(q.project, q.include),
                  LinearMap::identity(f, pa.image.dim()));
  return rep;
}

namespace {

// R applied inside a tensor: consumes adjacent (B, A) factors, produces
// (A, B).
Tensor apply_r(const WeakSmashStructure& s, const Tensor& t,
               std::size_t first) {
  return t.apply(s.r, first, 2, {s.a.dim, s.b.dim});
}

}  // namespace

Report verify_smash_structure(const WeakSmashStructure& s) {
  Report rep("smash_structure");
  const Field& f = s.a.field;
  const std::size_t na = s.a.dim, nb = s.b.dim;

  // R(bd (x) a) = a_{Rr} (x) b_r d_R
  sweep_check(rep, "r_mult_left", {nb, nb, na}, [&](const auto& t) {
    Tensor lhs = Tensor::from_vec(s.b.basis_product(t[0], t[1]))
                     .tensor_with(Tensor::basis_element({na}, {t[2]}, f));
    lhs = apply_r(s, lhs, 0);
    Tensor rhs = Tensor::basis_element({nb, na}, {t[1], t[2]}, f);
    rhs = apply_r(s, rhs, 0);  // (aR, dR)
    rhs = Tensor::basis_element({nb}, {t[0]}, f).tensor_with(rhs);
    rhs = apply_r(s, rhs, 0);  // (aRr, br, dR)
    rhs = rhs.apply(s.b.mult, 1, 2, {nb});
    return std::pair(lhs, rhs);
  });
  // R(b (x) ac) = a_R c_r (x) b_{Rr}
  sweep_check(rep, "r_mult_right", {nb, na, na}, [&](const auto& t) {
    Tensor lhs = Tensor::basis_element({nb}, {t[0]}, f)
                     .tensor_with(Tensor::from_vec(s.a.basis_product(t[1], t[2])));
    lhs = apply_r(s, lhs, 0);
    Tensor rhs = Tensor::basis_element({nb, na}, {t[0], t[1]}, f);
    rhs = apply_r(s, rhs, 0);                       // (aR, bR)
    rhs = rhs.tensor_with(Tensor::basis_element({na}, {t[2]}, f));
    rhs = apply_r(s, rhs, 1);                       // (aR, cr, bRr)
    rhs = rhs.apply(s.a.mult, 0, 2, {na});
    return std::pair(lhs, rhs);
  });
  // R(1_B (x) a) = a (1_A)_R (x) (1_B)_R
  sweep_check(rep, "r_preunit_left", {na}, [&](const auto& t) {
    Tensor lhs = Tensor::from_vec(s.b.unit)
                     .tensor_with(Tensor::basis_element({na}, {t[0]}, f));
    lhs = apply_r(s, lhs, 0);
    Tensor rhs = Tensor::from_vec(s.b.unit).tensor_with(Tensor::from_vec(s.a.unit));
    rhs = apply_r(s, rhs, 0);
    rhs = Tensor::basis_element({na}, {t[0]}, f).tensor_with(rhs);
    rhs = rhs.apply(s.a.mult, 0, 2, {na});
    return std::pair(lhs, rhs);
  });
  // R(b (x) 1_A) = (1_A)_R (x) (1_B)_R b
  sweep_check(rep, "r_preunit_right", {nb}, [&](const auto& t) {
    Tensor lhs = Tensor::basis_element({nb}, {t[0]}, f)
                     .tensor_with(Tensor::from_vec(s.a.unit));
    lhs = apply_r(s, lhs, 0);
    Tensor rhs = Tensor::from_vec(s.b.unit).tensor_with(Tensor::from_vec(s.a.unit));
    rhs = apply_r(s, rhs, 0);
    rhs = rhs.tensor_with(Tensor::basis_element({nb}, {t[0]}, f));
    rhs = rhs.apply(s.b.mult, 1, 2, {nb});
    return std::pair(lhs, rhs);
  });
  return rep;
}

std::pair<Report, PreunitalAlgebra> smash_product(const WeakSmashStructure& s) {
  Report rep("smash_product");
  rep.merge("laws", verify_smash_structure(s));
  const Field& f = s.a.field;
  const std::size_t na = s.a.dim, nb = s.b.dim, n = na * nb;

  LinearMap mult(f, n, n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t a2 = 0; a2 < nb; ++a2)
      for (std::size_t j = 0; j < na; ++j)
        for (std::size_t b2 = 0; b2 < nb; ++b2) {
          // (e_i # e_a2)(e_j # e_b2) = e_i (e_j)_R # (e_a2)_R e_b2
          Tensor t = Tensor::basis_element({nb, na}, {a2, j}, f);
          t = apply_r(s, t, 0);  // (jR, a2R)
          t = Tensor::basis_element({na}, {i}, f)
                  .tensor_with(t)
                  .tensor_with(Tensor::basis_element({nb}, {b2}, f));
          t = t.apply(s.a.mult, 0, 2, {na});
          t = t.apply(s.b.mult, 1, 2, {nb});
          std::size_t col = (i * nb + a2) * n + (j * nb + b2);
          for (std::size_t k = 0; k < n; ++k)
            mult.at(k, col) = t.coords()[k];
        }

  Vec preunit = kron_vec(s.a.unit, s.b.unit);
  auto [prep, pa] = make_preunital(f, mult, preunit);
  rep.merge("preunital", prep);

  AlgebraData amb{f, n, mult, Vec(f, n)};
  sweep_check(rep, "associativity", {n, n, n}, [&](const auto& t) {
    Vec lhs = amb.mul(amb.basis_product(t[0], t[1]), Vec::basis(f, n, t[2]));
    Vec rhs = amb.mul(Vec::basis(f, n, t[0]), amb.basis_product(t[1], t[2]));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  return {rep, pa};
}

Report verify_weak_entwining(const WeakEntwining& e) {
  Report rep("weak_entwining");
  const Field& f = e.a.field;
  const std::size_t na = e.a.dim, nc = e.c.dim;
  auto psi_at = [&](const Tensor& t, std::size_t first) {
    return t.apply(e.psi, first, 2, {na, nc});
  };

  // a_psi (x) Delta(c^psi) = a_{psi Psi} (x) c_(1)^Psi (x) c_(2)^psi
  sweep_check(rep, "comult_compatible", {na, nc}, [&](const auto& t) {
    Tensor lhs = psi_at(Tensor::basis_element({na, nc}, {t[0], t[1]}, f), 0)
                     .apply(e.c.comult, 1, 1, {nc, nc});
    Tensor rhs = Tensor::basis_element({na, nc}, {t[0], t[1]}, f)
                     .apply(e.c.comult, 1, 1, {nc, nc});
    rhs = psi_at(rhs.permute({0, 2, 1}), 0);  // (a_psi, c2^psi, c1)
    rhs = psi_at(rhs.permute({0, 2, 1}), 0);  // (a_psiPsi, c1^Psi, c2^psi)
    return std::pair(lhs, rhs);
  });
  // (ab)_psi (x) c^psi = a_psi b_Psi (x) c^{Psi psi}
  sweep_check(rep, "mult_compatible", {na, na, nc}, [&](const auto& t) {
    Tensor lhs = Tensor::from_vec(e.a.basis_product(t[0], t[1]))
                     .tensor_with(Tensor::basis_element({nc}, {t[2]}, f));
    lhs = psi_at(lhs, 0);
    Tensor rhs = psi_at(Tensor::basis_element({na, nc}, {t[1], t[2]}, f), 0);
    rhs = Tensor::basis_element({na}, {t[0]}, f).tensor_with(rhs);
    rhs = psi_at(rhs.permute({0, 2, 1}), 0);  // (a_psi, c^{Psi psi}, b_Psi)
    rhs = rhs.permute({0, 2, 1}).apply(e.a.mult, 0, 2, {na});
    return std::pair(lhs, rhs);
  });
  // 1_psi (x) c^psi = eps(c_(1)^psi) 1_psi (x) c_(2)
  sweep_check(rep, "unit_compatible", {nc}, [&](const auto& t) {
    Tensor lhs = psi_at(Tensor::from_vec(e.a.unit).tensor_with(
                            Tensor::basis_element({nc}, {t[0]}, f)),
                        0);
    Tensor rhs = Tensor::basis_element({nc}, {t[0]}, f)
                     .apply(e.c.comult, 0, 1, {nc, nc});
    rhs = Tensor::from_vec(e.a.unit).tensor_with(rhs);  // (1, c1, c2)
    rhs = psi_at(rhs, 0).pair_with(e.c.counit, 1);
    return std::pair(lhs, rhs);
  });
  // a_psi eps(c^psi) = eps(c^psi) a 1_psi
  sweep_check(rep, "counit_compatible", {na, nc}, [&](const auto& t) {
    Tensor lhs = psi_at(Tensor::basis_element({na, nc}, {t[0], t[1]}, f), 0)
                     .pair_with(e.c.counit, 1);
    Tensor rhs = psi_at(Tensor::from_vec(e.a.unit).tensor_with(
                            Tensor::basis_element({nc}, {t[1]}, f)),
                        0)
                     .pair_with(e.c.counit, 1);
    rhs = Tensor::basis_element({na}, {t[0]}, f).tensor_with(rhs);
    rhs = rhs.apply(e.a.mult, 0, 2, {na});
    return std::pair(lhs, rhs);
  });
  return rep;
}

Report verify_doihopf(const DoiHopfDatum& d) {
  Report rep("doihopf");
  const Field& f = d.a.field;
  const std::size_t na = d.a.dim, np = d.hp.dim(), nc = d.c.dim;

  sweep_check(rep, "comodule.coassociativity", {na}, [&](const auto& t) {
    Tensor r = Tensor({na, np}, d.coaction.column(t[0]));
    return std::pair(r.apply(d.coaction, 0, 1, {na, np}),
                     r.apply(d.hp.base.coalg.comult, 1, 1, {np, np}));
  });
  sweep_check(rep, "comodule.counit", {na}, [&](const auto& t) {
    Tensor r = Tensor({na, np}, d.coaction.column(t[0]));
    return std::pair(r.pair_with(d.hp.base.coalg.counit, 1),
                     Tensor::basis_element({na}, {t[0]}, f));
  });
  sweep_check(rep, "comodule_algebra.multiplicative", {na, na},
              [&](const auto& t) {
                Tensor lhs = Tensor(
                    {na, np},
                    d.coaction.apply(d.a.basis_product(t[0], t[1])));
                Tensor rhs = Tensor({na, np}, d.coaction.column(t[0]))
                                 .tensor_with(Tensor({na, np},
                                                     d.coaction.column(t[1])))
                                 .permute({0, 2, 1, 3});
                rhs = rhs.apply(d.a.mult, 0, 2, {na});
                rhs = rhs.apply(d.hp.base.alg.mult, 1, 2, {np});
                return std::pair(lhs, rhs);
              });
  {
    Tensor rho1 = Tensor({na, np}, d.coaction.apply(d.a.unit));
    rep.record("comodule_algebra.unit_target",
               rho1.apply(d.hp.base.eps_t, 1, 1, {np}) == rho1);
  }

  rep.merge("module_coalgebra", verify_module(d.hp.base.alg, d.action));
  sweep_check(rep, "module_coalgebra.comult_action", {np, nc},
              [&](const auto& t) {
                Tensor lhs = Tensor(
                    {nc, nc},
                    d.c.comult.apply(d.action.act[t[0]].column(t[1])));
                Tensor rhs =
                    Tensor({np, np}, d.hp.base.coalg.comult.column(t[0]))
                        .tensor_with(Tensor(
                            {nc, nc}, d.c.comult.column(t[1])))
                        .permute({0, 2, 1, 3});
                rhs = rhs.apply(d.action.flat(np), 0, 2, {nc});
                rhs = rhs.apply(d.action.flat(np), 1, 2, {nc});
                return std::pair(lhs, rhs);
              });
  sweep_check(rep, "module_coalgebra.counit_law", {np, np, nc},
              [&](const auto& t) {
                Scalar lhs = d.c.counit.dot(
                    d.action.action_of(d.hp.base.alg.basis_product(t[0], t[1]))
                        .column(t[2]));
                Vec dk = d.hp.base.coalg.comult.column(t[1]);
                Scalar rhs = Scalar::zero(f);
                for (std::size_t x = 0; x < np; ++x)
                  for (std::size_t y = 0; y < np; ++y) {
                    const Scalar& c = dk[x * np + y];
                    if (c.is_zero()) continue;
                    rhs += c *
                           d.hp.eps(d.hp.base.alg.basis_product(t[0], y)) *
                           d.c.counit.dot(d.action.act[x].column(t[2]));
                  }
                return std::pair(Tensor::scalar(lhs), Tensor::scalar(rhs));
              });
  return rep;
}

WeakEntwining doihopf_to_entwining(const DoiHopfDatum& d) {
  const Field& f = d.a.field;
  const std::size_t na = d.a.dim, np = d.hp.dim(), nc = d.c.dim;
  LinearMap psi(f, na * nc, na * nc);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t c = 0; c < nc; ++c) {
      Tensor t = Tensor({na, np}, d.coaction.column(a))
                     .tensor_with(Tensor::basis_element({nc}, {c}, f));
      t = t.apply(d.action.flat(np), 1, 2, {nc});
      for (std::size_t k = 0; k < na * nc; ++k)
        psi.at(k, a * nc + c) = t.coords()[k];
    }
  return WeakEntwining{d.a, d.c, psi};
}

DoiHopfDatum canonical_yd_datum(const WeakHopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  WeakHopfAlgebra hp = hopf_tensor(opposite(h), h);

  LinearMap coact(f, n * n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Tensor d3 = h.base.expand(h.base.expand(h.base.basis_tensor(j), 0), 1);
    Tensor t = d3.apply(h.antipode_inv, 0, 1, {n}).permute({1, 0, 2});
    for (std::size_t k = 0; k < n * n * n; ++k)
      coact.at(k, j) = t.coords()[k];
  }

  ModuleData action{Side::Left, n, {}};
  for (std::size_t idx = 0; idx < n * n; ++idx) {
    std::size_t k = idx / n, hh = idx % n;
    action.act.push_back(matmul(h.base.alg.left_mult(h.basis(hh)),
                                h.base.alg.right_mult(h.basis(k))));
  }
  return DoiHopfDatum{std::move(hp), h.base.alg, std::move(coact),
                      h.base.coalg, std::move(action)};
}

LinearMap canonical_entwining_psi(const WeakHopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Field& f = h.field();
  LinearMap psi(f, n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Tensor d3 = h.base.expand(h.base.expand(h.base.basis_tensor(i), 0), 1);
      Tensor t = d3.apply(h.antipode_inv, 0, 1, {n})
                     .tensor_with(Tensor::basis_element({n}, {k}, f))
                     .permute({1, 2, 3, 0});  // (h2, h3, k, S^{-1} h1)
      t = h.base.contract(t, 1);
      t = h.base.contract(t, 1);
      for (std::size_t r = 0; r < n * n; ++r)
        psi.at(r, i * n + k) = t.coords()[r];
    }
  return psi;
}

Report entwined_module_check(const WeakEntwining& e, const ModuleData& action,
                             const LinearMap& coaction) {
  Report rep("entwined_module");
  const Field& f = e.a.field;
  const std::size_t na = e.a.dim, nc = e.c.dim, m = action.dim;
  {
    AlgebraData amb{f, na, e.a.mult, e.a.unit};
    rep.merge("module", verify_module(amb, action));
  }
  sweep_check(rep, "comodule.coassociativity", {m}, [&](const auto& t) {
    Tensor d = Tensor({m, nc}, coaction.column(t[0]));
    return std::pair(d.apply(coaction, 0, 1, {m, nc}),
                     d.apply(e.c.comult, 1, 1, {nc, nc}));
  });
  sweep_check(rep, "comodule.counit", {m}, [&](const auto& t) {
    Tensor d = Tensor({m, nc}, coaction.column(t[0]));
    return std::pair(d.pair_with(e.c.counit, 1),
                     Tensor::basis_element({m}, {t[0]}, f));
  });
  sweep_check(rep, "compatibility", {na, m}, [&](const auto& t) {
    Tensor lhs = Tensor({m, nc},
                        coaction.apply(action.act[t[0]].column(t[1])));
    Tensor rhs = Tensor::basis_element({na}, {t[0]}, f)
                     .tensor_with(Tensor({m, nc}, coaction.column(t[1])))
                     .permute({0, 2, 1});
    rhs = rhs.apply(e.psi, 0, 2, {na, nc});  // (a_psi, m1^psi, m0)
    rhs = rhs.permute({0, 2, 1});
    rhs = rhs.apply(action.flat(na), 0, 2, {m});
    return std::pair(lhs, rhs);
  });
  return rep;
}

LinearMap smash_r_from_entwining(const WeakEntwining& e) {
  const Field& f = e.a.field;
  const std::size_t na = e.a.dim, nc = e.c.dim;
  // R: C* (x) A -> A (x) C*, indexed (b, a) -> (u, i):
  // R(e_b* (x) e_a) = sum_i psi(e_a (x) e_i)|_{C-part at b} e_u (x) e_i*.
  LinearMap r(f, na * nc, nc * na);
  for (std::size_t b = 0; b < nc; ++b)
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t u = 0; u < na; ++u)
          r.at(u * nc + i, b * na + a) = e.psi.at(u * nc + b, a * nc + i);
  return r;
}

}  // namespace wha
