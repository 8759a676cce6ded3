#include "wha/duality.hpp"

namespace wha {

DualYDModule dual_yd(const WeakHopfAlgebra& h, const YDModule& m) {
  if (m.variant != YDVariant::LL) {
    throw Error(Error::Kind::VariantMismatch, "duality is built on the ll presentation");
  }
  const std::size_t n = h.dim(), md = m.dim;
  const Field& f = h.field();

  ModuleData dual_mod{Side::Left, md, {}};
  for (std::size_t k = 0; k < n; ++k)
    dual_mod.act.push_back(m.module.action_of(h.s(h.basis(k))).transpose());

  // lambda(m*) = sum_i <m*, n_i[0]> S^{-1}(n_i[-1]) (x) n_i*
  LinearMap coact(f, n * md, md);
  for (std::size_t j = 0; j < md; ++j) {
    Vec col(f, n * md);
    for (std::size_t i = 0; i < md; ++i)
      for (std::size_t a = 0; a < n; ++a) {
        const Scalar& c = m.coaction.at(a * md + j, i);
        if (!c.is_zero()) col += kron_vec(h.s_inv(h.basis(a)),
                                          Vec::basis(f, md, i))
                                     .scaled(c);
      }
    for (std::size_t k = 0; k < n * md; ++k) coact.at(k, j) = col[k];
  }
  return DualYDModule{YDModule{YDVariant::LL, md, dual_mod, coact}};
}

EvCoev ev_coev(const WeakHopfAlgebra& h, const YDModule& m) {
  const std::size_t n = h.dim(), md = m.dim;
  const Field& f = h.field();
  DualYDModule dm = dual_yd(h, m);
  const Subspace& ht = h.base.target_space;
  const std::size_t r = ht.dim();

  EvCoev out{truncated_tensor(h.base, dm.dual.module, m.module),
             truncated_tensor(h.base, m.module, dm.dual.module),
             LinearMap(f, r, md * md), LinearMap(f, md * md, r)};

  // ev(m* (x) m) = <m*, 1_(1) m> 1_(2), the H_t-valued pairing
  for (std::size_t j = 0; j < md; ++j)
    for (std::size_t i = 0; i < md; ++i) {
      Vec val(f, r);
      for (std::size_t a = 0; a < n; ++a) {
        Vec slice(f, n);
        for (std::size_t b = 0; b < n; ++b)
          slice[b] = h.base.delta_unit[a * n + b];
        if (slice.is_zero()) continue;
        const Scalar& c = m.module.act[a].at(j, i);  // <e_j*, e_a n_i>
        if (c.is_zero()) continue;
        auto z = ht.coordinates(slice);
        if (!z) throw Error(Error::Kind::Internal, "Delta(1) slice escaped H_t");
        val += z->scaled(c);
      }
      for (std::size_t k = 0; k < r; ++k) out.ev.at(k, j * md + i) = val[k];
    }

  // coev(z) = z . (sum_i n_i (x) n_i*)
  Vec canonical(f, md * md);
  for (std::size_t i = 0; i < md; ++i)
    canonical[i * md + i] = Scalar::one(f);
  for (std::size_t c = 0; c < r; ++c) {
    Vec img = diag_action(h.base, m.module, dm.dual.module, ht.basis_vector(c))
                  .apply(canonical);
    for (std::size_t k = 0; k < md * md; ++k) out.coev.at(k, c) = img[k];
  }
  return out;
}

Report verify_left_duality(const WeakHopfAlgebra& h, const YDModule& m) {
  Report rep("duality");
  const std::size_t n = h.dim(), md = m.dim;
  const Field& f = h.field();
  DualYDModule dm = dual_yd(h, m);
  EvCoev ec = ev_coev(h, m);
  ModuleData tmod = h.base.target_module();
  YDModule unit = yd_unit_object(h);

  // <h . m*, m> = <m*, S(h) m>
  sweep_check(rep, "pairing_compatibility", {n, md, md}, [&](const auto& t) {
    Scalar lhs = dm.dual.module.act[t[0]].at(t[2], t[1]);
    Scalar rhs = m.module.action_of(h.s(h.basis(t[0]))).at(t[1], t[2]);
    return std::pair(Tensor::scalar(lhs), Tensor::scalar(rhs));
  });
  // <m*_[0], m> S(m*_[-1]) = <m*, m_[0]> m_[-1]
  sweep_check(rep, "dual_coaction_identity", {md, md}, [&](const auto& t) {
    Tensor lhs = Tensor({n, md}, dm.dual.coaction.column(t[0]))
                     .pair_with(Vec::basis(f, md, t[1]), 1)
                     .apply(h.antipode, 0, 1, {n});
    Tensor rhs = Tensor({n, md}, m.coaction.column(t[1]))
                     .pair_with(Vec::basis(f, md, t[0]), 1);
    return std::pair(lhs, rhs);
  });
  {
    auto [drep, dyd] = check_yd(h, YDVariant::LL, dm.dual.module,
                                dm.dual.coaction);
    rep.merge("dual", drep);
  }

  // well-definedness of ev on the truncated space
  check_map_equal(rep, "ev_well_defined", matmul(ec.ev, ec.dual_m.projector),
                  ec.ev);
  // coev lands in the truncated space
  check_map_equal(rep, "coev_lands_in_image",
                  matmul(ec.m_dual.projector, ec.coev), ec.coev);

  // H-linearity
  sweep_check(rep, "ev_h_linear", {n}, [&](const auto& t) {
    LinearMap d = diag_action(h.base, dm.dual.module, m.module, h.basis(t[0]));
    LinearMap lhs = matmul(matmul(tmod.act[t[0]], ec.ev), ec.dual_m.projector);
    LinearMap rhs = matmul(matmul(ec.ev, d), ec.dual_m.projector);
    return std::pair(flatten_map(lhs), flatten_map(rhs));
  });
  sweep_check(rep, "coev_h_linear", {n}, [&](const auto& t) {
    LinearMap d = diag_action(h.base, m.module, dm.dual.module, h.basis(t[0]));
    LinearMap lhs = matmul(ec.coev, tmod.act[t[0]]);
    LinearMap rhs = matmul(d, ec.coev);
    return std::pair(flatten_map(lhs), flatten_map(rhs));
  });

  // H-colinearity
  {
    LinearMap co_dual_m = ambient_tensor_coaction(h, dm.dual, m);
    LinearMap lifted = kron(LinearMap::identity(f, n), ec.ev);
    check_map_equal(rep, "ev_h_colinear",
                    matmul(matmul(unit.coaction, ec.ev), ec.dual_m.projector),
                    matmul(lifted, matmul(co_dual_m, ec.dual_m.projector)));
    LinearMap co_m_dual = ambient_tensor_coaction(h, m, dm.dual);
    LinearMap lifted2 = kron(LinearMap::identity(f, n), ec.coev);
    check_map_equal(rep, "coev_h_colinear", matmul(co_m_dual, ec.coev),
                    matmul(lifted2, unit.coaction));
  }

  // zig-zag identities through the unit constraints
  {
    UnitConstraints um = unit_constraints(h.base, m.module);
    UnitConstraints ud = unit_constraints(h.base, dm.dual.module);
    LinearMap idm = LinearMap::identity(f, md);
    LinearMap z1 = matmul(um.r, matmul(kron(idm, ec.ev),
                                       matmul(kron(ec.coev, idm), um.l_inv)));
    check_map_equal(rep, "zigzag_module", z1, idm);
    LinearMap z2 = matmul(ud.l, matmul(kron(ec.ev, idm),
                                       matmul(kron(idm, ec.coev), ud.r_inv)));
    check_map_equal(rep, "zigzag_dual", z2, idm);
  }
  return rep;
}

}  // namespace wha
