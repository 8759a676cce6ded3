#include "wha/yetterdrinfeld.hpp"

namespace wha {

const char* variant_name(YDVariant v) {
  switch (v) {
    case YDVariant::LL: return "ll";
    case YDVariant::LR: return "lr";
    case YDVariant::RL: return "rl";
    case YDVariant::RR: return "rr";
  }
  return "?";
}

YDVariant variant_from_name(const std::string& s) {
  if (s == "ll") return YDVariant::LL;
  if (s == "lr") return YDVariant::LR;
  if (s == "rl") return YDVariant::RL;
  if (s == "rr") return YDVariant::RR;
  throw Error(Error::Kind::SchemaError, "unknown variant tag: " + s);
}

namespace {

// A (x) B -> B (x) A on coordinates.
LinearMap factor_swap(const Field& f, std::size_t da, std::size_t db) {
  LinearMap s(f, db * da, da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      s.at(j * da + i, i * db + j) = Scalar::one(f);
  return s;
}

Tensor coaction_tensor(const WeakHopfAlgebra& h, const YDModule& m,
                       std::size_t j) {
  if (coaction_is_left(m.variant)) {
    return Tensor({h.dim(), m.dim}, m.coaction.column(j));
  }
  return Tensor({m.dim, h.dim()}, m.coaction.column(j));
}

// sum over the nonzero coefficients of a vector in H (x) H
Tensor accumulate_pairs(const WeakHopfAlgebra& h, const Vec& coeffs,
                        const std::vector<std::size_t>& dims,
                        const std::function<Tensor(std::size_t, std::size_t)>&
                            term) {
  const std::size_t n = h.dim();
  Tensor acc(dims, h.field());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Scalar& c = coeffs[a * n + b];
      if (!c.is_zero()) acc = acc + term(a, b).scaled(c);
    }
  return acc;
}

LinearMap map_from_columns_fn(
    const Field& f, std::size_t rows, std::size_t cols,
    const std::function<Vec(std::size_t)>& col) {
  LinearMap m(f, rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Vec v = col(j);
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = v[i];
  }
  return m;
}

void validate_yd_shapes(const WeakHopfAlgebra& h, YDVariant variant,
                        const ModuleData& mod, const LinearMap& coact) {
  if (mod.side != action_side(variant)) {
    throw Error(Error::Kind::VariantMismatch,
                "module side does not match variant");
  }
  if (mod.act.size() != h.dim()) {
    throw Error(Error::Kind::DimMismatch, "action tensor arity");
  }
  if (coact.cols() != mod.dim || coact.rows() != h.dim() * mod.dim) {
    throw Error(Error::Kind::DimMismatch, "coaction shape");
  }
}

}  // namespace

std::pair<Report, std::optional<YDModule>> check_yd(const WeakHopfAlgebra& h,
                                                    YDVariant variant,
                                                    const ModuleData& mod,
                                                    const LinearMap& coact) {
  validate_yd_shapes(h, variant, mod, coact);
  Report rep(std::string("yd_") + variant_name(variant));
  const std::size_t n = h.dim();
  const std::size_t m = mod.dim;
  const Field& f = h.field();
  const bool left_co = coaction_is_left(variant);
  YDModule yd{variant, m, mod, coact};

  rep.merge("module", verify_module(h.base.alg, mod));

  // comodule axioms
  sweep_check(rep, "comodule.coassociativity", {m}, [&](const auto& t) {
    Tensor d = coaction_tensor(h, yd, t[0]);
    if (left_co) {
      return std::pair(d.apply(h.base.coalg.comult, 0, 1, {n, n}),
                       d.apply(coact, 1, 1, {n, m}));
    }
    return std::pair(d.apply(coact, 0, 1, {m, n}),
                     d.apply(h.base.coalg.comult, 1, 1, {n, n}));
  });
  sweep_check(rep, "comodule.counit", {m}, [&](const auto& t) {
    Tensor d = coaction_tensor(h, yd, t[0]);
    Tensor reduced = d.pair_with(h.base.coalg.counit, left_co ? 0 : 1);
    return std::pair(reduced, Tensor::basis_element({m}, {t[0]}, f));
  });

  // range condition: the coaction lands in the truncated tensor space
  ModuleData reg = regular_module(h.base.alg, mod.side);
  TruncatedTensor range_tt = left_co ? truncated_tensor(h.base, reg, mod)
                                     : truncated_tensor(h.base, mod, reg);
  check_map_equal(rep, "yd.range_condition",
                  matmul(range_tt.projector, coact), coact);

  // the crossed compatibility law, per variant
  switch (variant) {
    case YDVariant::LL:
      // h_(1) m_[-1] (x) h_(2) m_[0] = (h_(1) m)_[-1] h_(2) (x) (h_(1) m)_[0]
      sweep_check(rep, "yd.compatibility", {n, m}, [&](const auto& t) {
        Tensor lhs = Tensor({n, n}, h.base.coalg.comult.column(t[0]))
                         .tensor_with(coaction_tensor(h, yd, t[1]))
                         .permute({0, 2, 1, 3});
        lhs = h.base.contract(lhs, 0);
        lhs = lhs.apply(mod.flat(n), 1, 2, {m});
        Tensor rhs = accumulate_pairs(
            h, h.base.coalg.comult.column(t[0]), {n, m},
            [&](std::size_t a, std::size_t b) {
              Tensor lam = Tensor({n, m}, matmul(coact, mod.act[a]).column(t[1]));
              return lam.apply(h.base.alg.right_mult(h.basis(b)), 0, 1, {n});
            });
        return std::pair(lhs, rhs);
      });
      break;
    case YDVariant::LR:
      // h_(1) m_[0] (x) h_(2) m_[1] = (h_(2) m)_[0] (x) (h_(2) m)_[1] h_(1)
      sweep_check(rep, "yd.compatibility", {n, m}, [&](const auto& t) {
        Tensor lhs = Tensor({n, n}, h.base.coalg.comult.column(t[0]))
                         .tensor_with(coaction_tensor(h, yd, t[1]))
                         .permute({0, 2, 1, 3});
        lhs = lhs.apply(mod.flat(n), 0, 2, {m});
        lhs = h.base.contract(lhs, 1);
        Tensor rhs = accumulate_pairs(
            h, h.base.coalg.comult.column(t[0]), {m, n},
            [&](std::size_t a, std::size_t b) {
              Tensor rho = Tensor({m, n}, matmul(coact, mod.act[b]).column(t[1]));
              return rho.apply(h.base.alg.right_mult(h.basis(a)), 1, 1, {n});
            });
        return std::pair(lhs, rhs);
      });
      break;
    case YDVariant::RR:
      // m_[0] h_(1) (x) m_[1] h_(2) = (m h_(2))_[0] (x) h_(1) (m h_(2))_[1]
      sweep_check(rep, "yd.compatibility", {n, m}, [&](const auto& t) {
        Tensor lhs = coaction_tensor(h, yd, t[1])
                         .tensor_with(Tensor({n, n},
                                             h.base.coalg.comult.column(t[0])))
                         .permute({0, 2, 1, 3});
        lhs = lhs.apply(mod.flat(n), 0, 2, {m});
        lhs = h.base.contract(lhs, 1);
        Tensor rhs = accumulate_pairs(
            h, h.base.coalg.comult.column(t[0]), {m, n},
            [&](std::size_t a, std::size_t b) {
              Tensor rho = Tensor({m, n}, matmul(coact, mod.act[b]).column(t[1]));
              return rho.apply(h.base.alg.left_mult(h.basis(a)), 1, 1, {n});
            });
        return std::pair(lhs, rhs);
      });
      break;
    case YDVariant::RL:
      // h_(2) (m h_(1))_[-1] (x) (m h_(1))_[0] = m_[-1] h_(1) (x) m_[0] h_(2)
      sweep_check(rep, "yd.compatibility", {n, m}, [&](const auto& t) {
        Tensor lhs = accumulate_pairs(
            h, h.base.coalg.comult.column(t[0]), {n, m},
            [&](std::size_t a, std::size_t b) {
              Tensor lam = Tensor({n, m}, matmul(coact, mod.act[a]).column(t[1]));
              return lam.apply(h.base.alg.left_mult(h.basis(b)), 0, 1, {n});
            });
        Tensor rhs = coaction_tensor(h, yd, t[1])
                         .tensor_with(Tensor({n, n},
                                             h.base.coalg.comult.column(t[0])))
                         .permute({0, 2, 1, 3});
        rhs = h.base.contract(rhs, 0);
        rhs = rhs.apply(mod.flat(n), 1, 2, {m});
        return std::pair(lhs, rhs);
      });
      break;
  }

  // the equivalent closed form of the coaction of an acted element
  switch (variant) {
    case YDVariant::LL:
      // lambda(h m) = h_(1) m_[-1] S(h_(3)) (x) h_(2) m_[0]
      sweep_check(rep, "yd.closed_form", {n, m}, [&](const auto& t) {
        Tensor lhs = Tensor({n, m}, matmul(coact, mod.act[t[0]]).column(t[1]));
        Tensor d3 = h.base.expand(h.base.expand(h.base.basis_tensor(t[0]), 0), 1);
        Tensor rhs = d3.apply(h.antipode, 2, 1, {n})
                         .tensor_with(coaction_tensor(h, yd, t[1]))
                         .permute({0, 3, 2, 1, 4});
        rhs = h.base.contract(rhs, 0);
        rhs = h.base.contract(rhs, 0);
        rhs = rhs.apply(mod.flat(n), 1, 2, {m});
        return std::pair(lhs, rhs);
      });
      break;
    case YDVariant::LR:
      // rho(h m) = h_(2) m_[0] (x) h_(3) m_[1] S^{-1}(h_(1))
      sweep_check(rep, "yd.closed_form", {n, m}, [&](const auto& t) {
        Tensor lhs = Tensor({m, n}, matmul(coact, mod.act[t[0]]).column(t[1]));
        Tensor d3 = h.base.expand(h.base.expand(h.base.basis_tensor(t[0]), 0), 1);
        Tensor rhs = d3.apply(h.antipode_inv, 0, 1, {n})
                         .tensor_with(coaction_tensor(h, yd, t[1]))
                         .permute({1, 3, 2, 4, 0});
        rhs = rhs.apply(mod.flat(n), 0, 2, {m});
        rhs = h.base.contract(rhs, 1);
        rhs = h.base.contract(rhs, 1);
        return std::pair(lhs, rhs);
      });
      break;
    case YDVariant::RR:
      // rho(m h) = m_[0] h_(2) (x) S(h_(1)) m_[1] h_(3)
      sweep_check(rep, "yd.closed_form", {n, m}, [&](const auto& t) {
        Tensor lhs = Tensor({m, n}, matmul(coact, mod.act[t[0]]).column(t[1]));
        Tensor d3 = h.base.expand(h.base.expand(h.base.basis_tensor(t[0]), 0), 1);
        Tensor rhs = d3.apply(h.antipode, 0, 1, {n})
                         .tensor_with(coaction_tensor(h, yd, t[1]))
                         .permute({3, 1, 0, 4, 2});
        rhs = rhs.apply(mod.flat(n), 0, 2, {m});
        rhs = h.base.contract(rhs, 1);
        rhs = h.base.contract(rhs, 1);
        return std::pair(lhs, rhs);
      });
      break;
    case YDVariant::RL:
      // lambda(m h) = S^{-1}(h_(3)) m_[-1] h_(1) (x) m_[0] h_(2)
      sweep_check(rep, "yd.closed_form", {n, m}, [&](const auto& t) {
        Tensor lhs = Tensor({n, m}, matmul(coact, mod.act[t[0]]).column(t[1]));
        Tensor d3 = h.base.expand(h.base.expand(h.base.basis_tensor(t[0]), 0), 1);
        Tensor rhs = d3.apply(h.antipode_inv, 2, 1, {n})
                         .tensor_with(coaction_tensor(h, yd, t[1]))
                         .permute({2, 3, 0, 4, 1});
        rhs = h.base.contract(rhs, 0);
        rhs = h.base.contract(rhs, 0);
        rhs = rhs.apply(mod.flat(n), 1, 2, {m});
        return std::pair(lhs, rhs);
      });
      break;
  }

  // variant-specific derived identities
  if (variant == YDVariant::LL) {
    sweep_check(rep, "yd.counit_via_target", {m}, [&](const auto& t) {
      Tensor d = coaction_tensor(h, yd, t[0]);
      Tensor lhs = d.pair_with(h.base.coalg.counit, 0);
      Tensor rhs =
          d.apply(h.base.eps_t, 0, 1, {n}).apply(mod.flat(n), 0, 2, {m});
      return std::pair(lhs, rhs);
    });
    sweep_check(rep, "yd.target_scalars", {h.base.target_space.dim(), m},
                [&](const auto& t) {
                  Vec z = h.base.target_space.basis_vector(t[0]);
                  Tensor lhs = Tensor(
                      {n, m}, matmul(coact, mod.action_of(z)).column(t[1]));
                  Tensor rhs = coaction_tensor(h, yd, t[1])
                                   .apply(h.base.alg.left_mult(z), 0, 1, {n});
                  return std::pair(lhs, rhs);
                });
    sweep_check(rep, "yd.source_scalars", {h.base.source_space.dim(), m},
                [&](const auto& t) {
                  Vec y = h.base.source_space.basis_vector(t[0]);
                  Tensor lhs = Tensor(
                      {n, m}, matmul(coact, mod.action_of(y)).column(t[1]));
                  Tensor rhs =
                      coaction_tensor(h, yd, t[1])
                          .apply(h.base.alg.right_mult(h.s(y)), 0, 1, {n});
                  return std::pair(lhs, rhs);
                });
    {
      TruncatedTensor mh = truncated_tensor(h.base, mod, reg);
      sweep_check(rep, "yd.inverse_coaction_truncated", {m},
                  [&](const auto& t) {
                    Tensor u = coaction_tensor(h, yd, t[0])
                                   .apply(h.antipode_inv, 0, 1, {n})
                                   .permute({1, 0});
                    Tensor pu = Tensor(
                        {m, n}, mh.projector.apply(u.as_vec()));
                    return std::pair(pu, u);
                  });
    }
    sweep_check(rep, "yd.source_double_inverse_counit", {m},
                [&](const auto& t) {
                  Tensor u = coaction_tensor(h, yd, t[0])
                                 .apply(h.antipode_inv, 0, 1, {n})
                                 .apply(h.antipode_inv, 0, 1, {n})
                                 .apply(h.base.eps_s, 0, 1, {n})
                                 .apply(mod.flat(n), 0, 2, {m});
                  return std::pair(u, Tensor::basis_element({m}, {t[0]}, f));
                });
  } else if (variant == YDVariant::LR) {
    sweep_check(rep, "yd.source_scalars", {h.base.source_space.dim(), m},
                [&](const auto& t) {
                  Vec y = h.base.source_space.basis_vector(t[0]);
                  Tensor lhs = Tensor(
                      {m, n}, matmul(coact, mod.action_of(y)).column(t[1]));
                  Tensor rhs = coaction_tensor(h, yd, t[1])
                                   .apply(h.base.alg.left_mult(y), 1, 1, {n});
                  return std::pair(lhs, rhs);
                });
    sweep_check(rep, "yd.target_scalars", {h.base.target_space.dim(), m},
                [&](const auto& t) {
                  Vec z = h.base.target_space.basis_vector(t[0]);
                  Tensor lhs = Tensor(
                      {m, n}, matmul(coact, mod.action_of(z)).column(t[1]));
                  Tensor rhs = coaction_tensor(h, yd, t[1])
                                   .apply(h.base.alg.right_mult(h.s_inv(z)), 1,
                                          1, {n});
                  return std::pair(lhs, rhs);
                });
    // 1_(2) m_[0] (x) m_[1] S^{-1}(1_(1)) = rho(m)
    sweep_check(rep, "yd.unit_slide", {m}, [&](const auto& t) {
      Tensor lhs = accumulate_pairs(
          h, h.base.delta_unit, {m, n}, [&](std::size_t a, std::size_t b) {
            return coaction_tensor(h, yd, t[0])
                .apply(mod.act[b], 0, 1, {m})
                .apply(h.base.alg.right_mult(h.s_inv(h.basis(a))), 1, 1, {n});
          });
      return std::pair(lhs, coaction_tensor(h, yd, t[0]));
    });
  } else if (variant == YDVariant::RR) {
    sweep_check(rep, "yd.counit_right_form", {m}, [&](const auto& t) {
      Tensor d = coaction_tensor(h, yd, t[0]);
      return std::pair(d.pair_with(h.base.coalg.counit, 1),
                       Tensor::basis_element({m}, {t[0]}, f));
    });
    sweep_check(rep, "yd.target_double_inverse_counit", {m},
                [&](const auto& t) {
                  Tensor u = coaction_tensor(h, yd, t[0])
                                 .apply(h.antipode_inv, 1, 1, {n})
                                 .apply(h.antipode_inv, 1, 1, {n})
                                 .apply(h.base.eps_t, 1, 1, {n})
                                 .apply(mod.flat(n), 0, 2, {m});
                  return std::pair(u, Tensor::basis_element({m}, {t[0]}, f));
                });
    {
      TruncatedTensor hm = truncated_tensor(h.base, reg, mod);
      sweep_check(rep, "yd.inverse_coaction_truncated", {m},
                  [&](const auto& t) {
                    Tensor u = coaction_tensor(h, yd, t[0])
                                   .apply(h.antipode_inv, 1, 1, {n})
                                   .permute({1, 0});
                    Tensor pu = Tensor(
                        {n, m}, hm.projector.apply(u.as_vec()));
                    return std::pair(pu, u);
                  });
    }
  }

  if (!rep.all_passed()) return {rep, std::nullopt};
  return {rep, yd};
}

YDModule yd_unit_object(const WeakHopfAlgebra& h) {
  const std::size_t n = h.dim();
  const Subspace& ht = h.base.target_space;
  const std::size_t r = ht.dim();
  LinearMap rt = ht.retraction();
  LinearMap coact = map_from_columns_fn(
      h.field(), n * r, r, [&](std::size_t c) {
        Tensor d = Tensor::from_vec(ht.basis_vector(c))
                       .apply(h.base.coalg.comult, 0, 1, {n, n})
                       .apply(rt, 1, 1, {r});
        return d.as_vec();
      });
  return YDModule{YDVariant::LL, r, h.base.target_module(), coact};
}

YDModule yd_adjoint(const WeakHopfAlgebra& h) {
  const std::size_t n = h.dim();
  ModuleData mod{Side::Left, n, {}};
  for (std::size_t k = 0; k < n; ++k) {
    LinearMap a(h.field(), n, n);
    Vec dk = h.base.coalg.comult.column(k);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Scalar& c = dk[x * n + y];
        if (!c.is_zero())
          a += matmul(h.base.alg.left_mult(h.basis(x)),
                      h.base.alg.right_mult(h.s(h.basis(y))))
                   .scaled(c);
      }
    mod.act.push_back(std::move(a));
  }
  return YDModule{YDVariant::LL, n, mod, h.base.coalg.comult};
}

std::pair<Report, std::optional<YDModule>> yd_from_grading(
    const Groupoid& g, const WeakHopfAlgebra& kg,
    const std::vector<std::size_t>& degree_of_basis, const ModuleData& mod) {
  if (degree_of_basis.size() != mod.dim) {
    throw Error(Error::Kind::DimMismatch, "one degree per basis vector");
  }
  for (std::size_t j = 0; j < degree_of_basis.size(); ++j) {
    std::size_t d = degree_of_basis[j];
    if (d >= g.n_morphisms()) {
      throw Error(Error::Kind::BadSupport, "degree out of range");
    }
    if (g.source[d] != g.target[d]) {
      throw Error(Error::Kind::BadSupport,
                  "grading supported on morphism " + std::to_string(d) +
                      " with source " + std::to_string(g.source[d]) +
                      " != target " + std::to_string(g.target[d]));
    }
  }
  const std::size_t n = kg.dim(), m = mod.dim;
  LinearMap coact(kg.field(), n * m, m);
  for (std::size_t j = 0; j < m; ++j)
    coact.at(degree_of_basis[j] * m + j, j) = Scalar::one(kg.field());
  return check_yd(kg, YDVariant::LL, mod, coact);
}

YDModule yd_standard_graded(const Groupoid& g, const WeakHopfAlgebra& kg) {
  const std::size_t m = g.n_objects, n = kg.dim();
  const Field& f = kg.field();
  ModuleData mod{Side::Left, m, {}};
  for (std::size_t tau = 0; tau < n; ++tau) {
    LinearMap a(f, m, m);
    a.at(g.target[tau], g.source[tau]) = Scalar::one(f);
    mod.act.push_back(std::move(a));
  }
  LinearMap coact(f, n * m, m);
  for (std::size_t x = 0; x < m; ++x)
    coact.at(g.identity[x] * m + x, x) = Scalar::one(f);
  return YDModule{YDVariant::LL, m, mod, coact};
}

namespace {

LinearMap transform_coaction(const LinearMap& coact,
                             const std::vector<std::size_t>& in_dims,
                             const std::function<Tensor(const Tensor&)>& fn) {
  std::size_t cols = coact.cols();
  const Field& f = coact.field();
  LinearMap out;
  for (std::size_t j = 0; j < cols; ++j) {
    Tensor t(in_dims, coact.column(j));
    Tensor r = fn(t);
    if (j == 0) out = LinearMap(f, r.flat_size(), cols);
    for (std::size_t i = 0; i < r.flat_size(); ++i)
      out.at(i, j) = r.coords()[i];
  }
  return out;
}

ModuleData twist_action(const WeakHopfAlgebra& h, const ModuleData& mod,
                        const LinearMap& twist, Side new_side) {
  // new action of e_k = old action of twist(e_k)
  ModuleData out{new_side, mod.dim, {}};
  for (std::size_t k = 0; k < h.dim(); ++k)
    out.act.push_back(mod.action_of(twist.column(k)));
  return out;
}

// single conversion steps along the chain lr <-> ll <-> rr <-> rl
YDModule step_ll_to_lr(const WeakHopfAlgebra& h, const YDModule& m) {
  const std::size_t n = h.dim();
  LinearMap co = transform_coaction(m.coaction, {n, m.dim}, [&](const Tensor& t) {
    return t.apply(h.antipode_inv, 0, 1, {n}).permute({1, 0});
  });
  return YDModule{YDVariant::LR, m.dim, m.module, co};
}

YDModule step_lr_to_ll(const WeakHopfAlgebra& h, const YDModule& m) {
  const std::size_t n = h.dim();
  LinearMap co = transform_coaction(m.coaction, {m.dim, n}, [&](const Tensor& t) {
    return t.apply(h.antipode, 1, 1, {n}).permute({1, 0});
  });
  return YDModule{YDVariant::LL, m.dim, m.module, co};
}

YDModule step_ll_to_rr(const WeakHopfAlgebra& h, const YDModule& m) {
  const std::size_t n = h.dim();
  LinearMap co = transform_coaction(m.coaction, {n, m.dim}, [&](const Tensor& t) {
    return t.apply(h.antipode, 0, 1, {n}).permute({1, 0});
  });
  return YDModule{YDVariant::RR, m.dim,
                  twist_action(h, m.module, h.antipode_inv, Side::Right), co};
}

YDModule step_rr_to_ll(const WeakHopfAlgebra& h, const YDModule& m) {
  const std::size_t n = h.dim();
  LinearMap co = transform_coaction(m.coaction, {m.dim, n}, [&](const Tensor& t) {
    return t.apply(h.antipode_inv, 1, 1, {n}).permute({1, 0});
  });
  return YDModule{YDVariant::LL, m.dim,
                  twist_action(h, m.module, h.antipode, Side::Left), co};
}

YDModule step_rl_to_rr(const WeakHopfAlgebra& h, const YDModule& m) {
  const std::size_t n = h.dim();
  LinearMap co = transform_coaction(m.coaction, {n, m.dim}, [&](const Tensor& t) {
    return t.apply(h.antipode, 0, 1, {n}).permute({1, 0});
  });
  return YDModule{YDVariant::RR, m.dim, m.module, co};
}

YDModule step_rr_to_rl(const WeakHopfAlgebra& h, const YDModule& m) {
  const std::size_t n = h.dim();
  LinearMap co = transform_coaction(m.coaction, {m.dim, n}, [&](const Tensor& t) {
    return t.apply(h.antipode_inv, 1, 1, {n}).permute({1, 0});
  });
  return YDModule{YDVariant::RL, m.dim, m.module, co};
}

int chain_pos(YDVariant v) {
  switch (v) {
    case YDVariant::LR: return 0;
    case YDVariant::LL: return 1;
    case YDVariant::RR: return 2;
    case YDVariant::RL: return 3;
  }
  return 0;
}

}  // namespace

YDModule yd_convert(const WeakHopfAlgebra& h, const YDModule& m,
                    YDVariant target) {
  YDModule cur = m;
  while (cur.variant != target) {
    int pos = chain_pos(cur.variant), goal = chain_pos(target);
    if (pos < goal) {
      switch (cur.variant) {
        case YDVariant::LR: cur = step_lr_to_ll(h, cur); break;
        case YDVariant::LL: cur = step_ll_to_rr(h, cur); break;
        case YDVariant::RR: cur = step_rr_to_rl(h, cur); break;
        default: throw Error(Error::Kind::Internal, "conversion chain");
      }
    } else {
      switch (cur.variant) {
        case YDVariant::LL: cur = step_ll_to_lr(h, cur); break;
        case YDVariant::RR: cur = step_rr_to_ll(h, cur); break;
        case YDVariant::RL: cur = step_rl_to_rr(h, cur); break;
        default: throw Error(Error::Kind::Internal, "conversion chain");
      }
    }
  }
  return cur;
}

LinearMap ambient_tensor_coaction(const WeakHopfAlgebra& h, const YDModule& m,
                                  const YDModule& n) {
  const std::size_t hn = h.dim(), md = m.dim, nd = n.dim;
  const Field& f = h.field();
  const bool left_co = coaction_is_left(m.variant);
  std::size_t rows = hn * md * nd;
  LinearMap out(f, rows, md * nd);
  for (std::size_t i = 0; i < md; ++i)
    for (std::size_t j = 0; j < nd; ++j) {
      Tensor t = coaction_tensor(h, m, i).tensor_with(coaction_tensor(h, n, j));
      Tensor r(std::vector<std::size_t>{}, f);
      if (m.variant == YDVariant::LL) {
        // m_[-1] n_[-1] (x) m_[0] (x) n_[0]
        r = h.base.contract(t.permute({0, 2, 1, 3}), 0);
      } else if (m.variant == YDVariant::RL) {
        // n_[-1] m_[-1] (x) m_[0] (x) n_[0]: the transported product
        // reverses the coefficient order, exactly as in the lr case
        r = h.base.contract(t.permute({2, 0, 1, 3}), 0);
      } else if (m.variant == YDVariant::LR) {
        // m_[0] (x) n_[0] (x) n_[1] m_[1]  (reversed product)
        r = h.base.contract(t.permute({0, 2, 3, 1}), 2);
      } else {
        // m_[0] (x) n_[0] (x) m_[1] n_[1]
        r = h.base.contract(t.permute({0, 2, 1, 3}), 2);
      }
      for (std::size_t k = 0; k < rows; ++k)
        out.at(k, i * nd + j) = r.coords()[k];
    }
  return out;
}

YDTensorProduct yd_tensor(const WeakHopfAlgebra& h, const YDModule& m,
                          const YDModule& n) {
  if (m.variant != n.variant) {
    throw Error(Error::Kind::VariantMismatch,
                "tensor product of different variants");
  }
  const std::size_t hn = h.dim();
  YDTensorProduct out{YDModule{}, truncated_tensor(h.base, m.module, n.module),
                      ambient_tensor_coaction(h, m, n)};
  const bool left_co = coaction_is_left(m.variant);
  const std::size_t d = out.trunc.dim();

  ModuleData prod{m.module.side, d, {}};
  for (std::size_t k = 0; k < hn; ++k) {
    prod.act.push_back(matmul(
        out.trunc.ret,
        matmul(diag_action(h.base, m.module, n.module, h.basis(k)), out.trunc.inc)));
  }
  LinearMap co =
      left_co
          ? matmul(kron(LinearMap::identity(h.field(), hn), out.trunc.ret),
                   matmul(out.ambient_coaction, out.trunc.inc))
          : matmul(kron(out.trunc.ret, LinearMap::identity(h.field(), hn)),
                   matmul(out.ambient_coaction, out.trunc.inc));
  out.product = YDModule{m.variant, d, prod, co};
  return out;
}

LinearMap half_braiding_map(const WeakHopfAlgebra& h, const YDModule& m,
                            const ModuleData& x) {
  const std::size_t hn = h.dim(), md = m.dim, xd = x.dim;
  return map_from_columns_fn(
      h.field(), xd * md, md * xd, [&](std::size_t col) {
        std::size_t i = col / xd, j = col % xd;
        Tensor t = coaction_tensor(h, m, i)
                       .tensor_with(Tensor::basis_element({xd}, {j}, h.field()))
                       .permute({0, 2, 1});
        return t.apply(x.flat(hn), 0, 2, {xd}).as_vec();
      });
}

namespace {

LinearMap half_braiding_inverse_map(const WeakHopfAlgebra& h, const YDModule& m,
                                    const ModuleData& x) {
  const std::size_t hn = h.dim(), md = m.dim, xd = x.dim;
  return map_from_columns_fn(
      h.field(), md * xd, xd * md, [&](std::size_t col) {
        std::size_t j = col / md, i = col % md;
        Tensor t = coaction_tensor(h, m, i)
                       .apply(h.antipode_inv, 0, 1, {hn})
                       .tensor_with(Tensor::basis_element({xd}, {j}, h.field()))
                       .permute({1, 0, 2});
        return t.apply(x.flat(hn), 1, 2, {xd}).as_vec();
      });
}

}  // namespace

BraidingWitness braiding(const WeakHopfAlgebra& h, const YDModule& m,
                         const YDModule& n) {
  if (m.variant != n.variant) {
    throw Error(Error::Kind::VariantMismatch, "braiding across variants");
  }
  const Field& f = h.field();
  BraidingWitness w{truncated_tensor(h.base, m.module, n.module),
                    truncated_tensor(h.base, n.module, m.module), LinearMap(),
                    LinearMap()};
  switch (m.variant) {
    case YDVariant::LL: {
      w.sigma = matmul(half_braiding_map(h, m, n.module), w.src.projector);
      w.sigma_inv =
          matmul(half_braiding_inverse_map(h, m, n.module), w.dst.projector);
      break;
    }
    case YDVariant::LR: {
      YDModule cm = yd_convert(h, m, YDVariant::LL);
      YDModule cn = yd_convert(h, n, YDVariant::LL);
      w.sigma =
          matmul(half_braiding_inverse_map(h, cn, cm.module), w.src.projector);
      w.sigma_inv = matmul(half_braiding_map(h, cn, cm.module), w.dst.projector);
      break;
    }
    case YDVariant::RR: {
      YDModule cm = yd_convert(h, m, YDVariant::LL);
      YDModule cn = yd_convert(h, n, YDVariant::LL);
      LinearMap swap_mn = factor_swap(f, m.dim, n.dim);
      LinearMap swap_nm = factor_swap(f, n.dim, m.dim);
      w.sigma = matmul(
          factor_swap(f, m.dim, n.dim),
          matmul(half_braiding_map(h, cn, cm.module),
                 matmul(swap_mn, w.src.projector)));
      w.sigma_inv = matmul(
          factor_swap(f, n.dim, m.dim),
          matmul(half_braiding_inverse_map(h, cn, cm.module),
                 matmul(swap_nm, w.dst.projector)));
      break;
    }
    case YDVariant::RL: {
      YDModule cm = yd_convert(h, m, YDVariant::RR);
      YDModule cn = yd_convert(h, n, YDVariant::RR);
      BraidingWitness wr = braiding(h, cn, cm);
      w.sigma = matmul(wr.sigma_inv, w.src.projector);
      w.sigma_inv = matmul(wr.sigma, w.dst.projector);
      break;
    }
  }
  return w;
}

Report verify_braiding(const WeakHopfAlgebra& h, const YDModule& m,
                       const YDModule& n) {
  Report rep("braiding");
  BraidingWitness w = braiding(h, m, n);
  const std::size_t hn = h.dim();
  const Field& f = h.field();

  check_map_equal(rep, "maps_into_image",
                  matmul(w.dst.projector, w.sigma), w.sigma);
  check_map_equal(rep, "inverse_maps_into_image",
                  matmul(w.src.projector, w.sigma_inv), w.sigma_inv);
  check_map_equal(rep, "inverse_on_source", matmul(w.sigma_inv, w.sigma),
                  w.src.projector);
  check_map_equal(rep, "inverse_on_target", matmul(w.sigma, w.sigma_inv),
                  w.dst.projector);

  sweep_check(rep, "h_linear", {hn}, [&](const auto& t) {
    LinearMap dsrc = diag_action(h.base, m.module, n.module, h.basis(t[0]));
    LinearMap ddst = diag_action(h.base, n.module, m.module, h.basis(t[0]));
    return std::pair(flatten_map(matmul(w.sigma, matmul(dsrc, w.src.projector))),
                     flatten_map(matmul(ddst, w.sigma)));
  });

  // H-colinearity against the tensor coactions.
  {
    LinearMap co_src = ambient_tensor_coaction(h, m, n);
    LinearMap co_dst = ambient_tensor_coaction(h, n, m);
    bool left_co = coaction_is_left(m.variant);
    LinearMap lifted =
        left_co ? kron(LinearMap::identity(f, hn), w.sigma)
                : kron(w.sigma, LinearMap::identity(f, hn));
    check_map_equal(rep, "h_colinear",
                    matmul(co_dst, w.sigma),
                    matmul(lifted, matmul(co_src, w.src.projector)));
  }

  // Direct formulas, where available for the variant.
  if (m.variant == YDVariant::LR) {
    LinearMap direct = map_from_columns_fn(
        f, n.dim * m.dim, m.dim * n.dim, [&](std::size_t col) {
          std::size_t i = col / n.dim, j = col % n.dim;
          Tensor t = coaction_tensor(h, n, j).tensor_with(
              Tensor::basis_element({m.dim}, {i}, f));
          return t.apply(m.module.flat(hn), 1, 2, {m.dim}).as_vec();
        });
    check_map_equal(rep, "direct_formula", w.sigma,
                    matmul(direct, w.src.projector));
  } else if (m.variant == YDVariant::RR) {
    LinearMap direct = map_from_columns_fn(
        f, n.dim * m.dim, m.dim * n.dim, [&](std::size_t col) {
          std::size_t i = col / n.dim, j = col % n.dim;
          Tensor t = coaction_tensor(h, n, j)
                         .tensor_with(Tensor::basis_element({m.dim}, {i}, f))
                         .permute({0, 2, 1});
          return t.apply(m.module.flat(hn), 1, 2, {m.dim}).as_vec();
        });
    check_map_equal(rep, "direct_formula", w.sigma,
                    matmul(direct, w.src.projector));
    LinearMap direct_inv = map_from_columns_fn(
        f, m.dim * n.dim, n.dim * m.dim, [&](std::size_t col) {
          std::size_t j = col / m.dim, i = col % m.dim;
          Tensor t = coaction_tensor(h, n, j)
                         .apply(h.antipode_inv, 1, 1, {hn})
                         .tensor_with(Tensor::basis_element({m.dim}, {i}, f))
                         .permute({2, 1, 0});
          return t.apply(m.module.flat(hn), 0, 2, {m.dim}).as_vec();
        });
    check_map_equal(rep, "direct_inverse_formula", w.sigma_inv,
                    matmul(direct_inv, w.dst.projector));
  } else if (m.variant == YDVariant::RL) {
    LinearMap direct = map_from_columns_fn(
        f, n.dim * m.dim, m.dim * n.dim, [&](std::size_t col) {
          std::size_t i = col / n.dim, j = col % n.dim;
          Tensor t = coaction_tensor(h, m, i)
                         .tensor_with(Tensor::basis_element({n.dim}, {j}, f))
                         .permute({2, 0, 1});
          return t.apply(n.module.flat(hn), 0, 2, {n.dim}).as_vec();
        });
    check_map_equal(rep, "direct_formula", w.sigma,
                    matmul(direct, w.src.projector));
  }
  return rep;
}

Report check_center_condition(const WeakHopfAlgebra& h, const YDModule& m,
                              const ModuleData& x, const ModuleData& y) {
  if (m.variant != YDVariant::LL) {
    throw Error(Error::Kind::VariantMismatch,
                "center condition checked on the ll presentation");
  }
  Report rep("center");
  const Field& f = h.field();

  // hexagon-type coherence on the concrete triple
  {
    LinearMap p3 = triple_projector(h.base, m.module, x, y);
    LinearMap smx = half_braiding_map(h, m, x);
    LinearMap smy = half_braiding_map(h, m, y);
    LinearMap smxy = half_braiding_map(h, m, diag_module(h.base, x, y));
    LinearMap lhs = matmul(kron(LinearMap::identity(f, x.dim), smy),
                           kron(smx, LinearMap::identity(f, y.dim)));
    check_map_equal_on(rep, "half_braiding_coherence", lhs, smxy, p3);
  }

  // sigma_{M,H_t} equals the unit-constraint composite l^{-1} o r
  {
    UnitConstraints u = unit_constraints(h.base, m.module);
    ModuleData tm = h.base.target_module();
    LinearMap smt = half_braiding_map(h, m, tm);
    check_map_equal_on(rep, "unit_half_braiding", smt,
                       matmul(u.l_inv, u.r), u.m_ht.projector);
  }

  // sigma_{H_t,M} (unit object half-braiding) equals r^{-1} o l
  {
    UnitConstraints u = unit_constraints(h.base, m.module);
    YDModule unit = yd_unit_object(h);
    LinearMap stm = half_braiding_map(h, unit, m.module);
    check_map_equal_on(rep, "unit_coherence", stm, matmul(u.r_inv, u.l),
                       u.ht_m.projector);
  }

  // naturality against right-multiplication endomorphisms of the regular
  // module (H-linear probe family)
  if (x.dim == h.dim()) {
    TruncatedTensor tt = truncated_tensor(h.base, m.module, x);
    LinearMap smx = half_braiding_map(h, m, x);
    sweep_check(rep, "naturality_right_mult_probes", {h.dim()},
                [&](const auto& t) {
                  LinearMap rk = h.base.alg.right_mult(h.basis(t[0]));
                  LinearMap lhs = matmul(
                      kron(rk, LinearMap::identity(f, m.dim)),
                      matmul(smx, tt.projector));
                  LinearMap rhs = matmul(
                      smx, matmul(kron(LinearMap::identity(f, m.dim), rk),
                                  tt.projector));
                  return std::pair(flatten_map(lhs), flatten_map(rhs));
                });
  }
  return rep;
}

Report verify_conversion_cycles(const WeakHopfAlgebra& h, const YDModule& m) {
  Report rep("conversions");
  const YDVariant vs[4] = {YDVariant::LL, YDVariant::LR, YDVariant::RL,
                           YDVariant::RR};
  for (YDVariant v : vs) {
    YDModule a = yd_convert(h, m, v);
    for (YDVariant wv : vs) {
      if (v == wv) continue;
      YDModule b = yd_convert(h, a, wv);
      YDModule c = yd_convert(h, b, v);
      bool same = c.coaction == a.coaction && c.module.side == a.module.side;
      for (std::size_t k = 0; same && k < h.dim(); ++k)
        same = c.module.act[k] == a.module.act[k];
      rep.record(std::string("round_trip_") + variant_name(v) + "_" +
                     variant_name(wv),
                 same);
      auto [sub, ydb] = check_yd(h, b.variant, b.module, b.coaction);
      rep.record(std::string("converted_passes_") + variant_name(v) + "_" +
                     variant_name(wv),
                 sub.all_passed());
    }
  }
  return rep;
}

}  // namespace wha
