#include "wha/algebra.hpp"

#include "wha/verify.hpp"

namespace wha {

Vec AlgebraData::mul(const Vec& a, const Vec& b) const {
  Vec out(field, dim);
  Scalar scratch = Scalar::zero(field);
  for (std::size_t i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& m = mult.at(k, i * dim + j);
        if (!m.is_zero()) out[k].add_product(c, m, scratch);
      }
    }
  }
  return out;
}

LinearMap AlgebraData::left_mult(const Vec& a) const {
  std::vector<Vec> cols;
  cols.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    cols.push_back(mul(a, Vec::basis(field, dim, j)));
  }
  return LinearMap::from_columns(field, dim, cols);
}

LinearMap AlgebraData::right_mult(const Vec& a) const {
  std::vector<Vec> cols;
  cols.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    cols.push_back(mul(Vec::basis(field, dim, j), a));
  }
  return LinearMap::from_columns(field, dim, cols);
}

Report verify_algebra(const AlgebraData& a) {
  Report rep("algebra");
  const std::size_t n = a.dim;
  sweep_check(rep, "associativity", {n, n, n}, [&](const auto& t) {
    Vec lhs = a.mul(a.basis_product(t[0], t[1]), Vec::basis(a.field, n, t[2]));
    Vec rhs = a.mul(Vec::basis(a.field, n, t[0]), a.basis_product(t[1], t[2]));
    return std::pair(Tensor::from_vec(lhs), Tensor::from_vec(rhs));
  });
  sweep_check(rep, "unit", {n}, [&](const auto& t) {
    Vec e = Vec::basis(a.field, n, t[0]);
    Vec lhs = a.mul(a.unit, e);
    Vec rhs = a.mul(e, a.unit);
    // both must equal e; encode as one pairwise comparison via stacking
    Vec both_l(a.field, 2 * n), both_r(a.field, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      both_l[i] = lhs[i];
      both_l[n + i] = rhs[i];
      both_r[i] = e[i];
      both_r[n + i] = e[i];
    }
    return std::pair(Tensor::from_vec(both_l), Tensor::from_vec(both_r));
  });
  return rep;
}

Report verify_coalgebra(const CoalgebraData& c) {
  Report rep("coalgebra");
  const std::size_t n = c.dim;
  sweep_check(rep, "coassociativity", {n}, [&](const auto& t) {
    Tensor d = Tensor::basis_element({n}, {t[0]}, c.field)
                   .apply(c.comult, 0, 1, {n, n});
    Tensor lhs = d.apply(c.comult, 0, 1, {n, n});
    Tensor rhs = d.apply(c.comult, 1, 1, {n, n});
    return std::pair(lhs, rhs);
  });
  sweep_check(rep, "counit_left", {n}, [&](const auto& t) {
    Tensor d = Tensor::basis_element({n}, {t[0]}, c.field)
                   .apply(c.comult, 0, 1, {n, n});
    return std::pair(d.pair_with(c.counit, 0),
                     Tensor::basis_element({n}, {t[0]}, c.field));
  });
  sweep_check(rep, "counit_right", {n}, [&](const auto& t) {
    Tensor d = Tensor::basis_element({n}, {t[0]}, c.field)
                   .apply(c.comult, 0, 1, {n, n});
    return std::pair(d.pair_with(c.counit, 1),
                     Tensor::basis_element({n}, {t[0]}, c.field));
  });
  return rep;
}

AlgebraData algebra_tensor(const AlgebraData& a, const AlgebraData& b) {
  const Field& f = a.field;
  const std::size_t n = a.dim, m = b.dim, nm = n * m;
  AlgebraData t{f, nm, LinearMap(f, nm, nm * nm), kron_vec(a.unit, b.unit)};
  for (std::size_t i1 = 0; i1 < n; ++i1)
    for (std::size_t j1 = 0; j1 < m; ++j1)
      for (std::size_t i2 = 0; i2 < n; ++i2)
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          Vec prod = kron_vec(a.basis_product(i1, i2), b.basis_product(j1, j2));
          std::size_t col = (i1 * m + j1) * nm + (i2 * m + j2);
          for (std::size_t k = 0; k < nm; ++k) t.mult.at(k, col) = prod[k];
        }
  return t;
}

AlgebraData algebra_opposite(const AlgebraData& a) {
  AlgebraData o{a.field, a.dim, LinearMap(a.field, a.dim, a.dim * a.dim),
                a.unit};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec p = a.basis_product(j, i);
      for (std::size_t k = 0; k < a.dim; ++k)
        o.mult.at(k, i * a.dim + j) = p[k];
    }
  return o;
}

CoalgebraData coalgebra_tensor(const CoalgebraData& a, const CoalgebraData& b) {
  const Field& f = a.field;
  const std::size_t n = a.dim, m = b.dim, nm = n * m;
  CoalgebraData t{f, nm, LinearMap(f, nm * nm, nm),
                  kron_vec(a.counit, b.counit)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Tensor d = Tensor::basis_element({n}, {i}, f)
                     .apply(a.comult, 0, 1, {n, n})
                     .tensor_with(Tensor::basis_element({m}, {j}, f)
                                      .apply(b.comult, 0, 1, {m, m}));
      // (a1, a2, b1, b2) -> ((a1 b1), (a2 b2))
      Tensor r = d.permute({0, 2, 1, 3});
      for (std::size_t k = 0; k < nm * nm; ++k)
        t.comult.at(k, i * m + j) = r.coords()[k];
    }
  return t;
}

LinearMap ModuleData::action_of(const Vec& coeffs) const {
  LinearMap out(coeffs.field(), dim, dim);
  for (std::size_t h = 0; h < coeffs.size(); ++h) {
    if (!coeffs[h].is_zero()) out += act[h].scaled(coeffs[h]);
  }
  return out;
}

LinearMap ModuleData::flat(std::size_t adim) const {
  const Field& f = act.empty() ? Field::rationals() : act[0].field();
  if (side == Side::Left) {
    LinearMap out(f, dim, adim * dim);
    for (std::size_t h = 0; h < adim; ++h)
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          out.at(i, h * dim + j) = act[h].at(i, j);
    return out;
  }
  LinearMap out(f, dim, dim * adim);
  for (std::size_t h = 0; h < adim; ++h)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        out.at(i, j * adim + h) = act[h].at(i, j);
  return out;
}

Report verify_module(const AlgebraData& a, const ModuleData& m) {
  Report rep("module");
  const std::size_t n = a.dim;
  sweep_check(rep, "composition", {n, n}, [&](const auto& t) {
    LinearMap rhs = m.action_of(a.basis_product(t[0], t[1]));
    LinearMap lhs = m.side == Side::Left ? matmul(m.act[t[0]], m.act[t[1]])
                                         : matmul(m.act[t[1]], m.act[t[0]]);
    return std::pair(flatten_map(lhs), flatten_map(rhs));
  });
  check_map_equal(rep, "unit", m.action_of(a.unit),
                  LinearMap::identity(a.field, m.dim));
  return rep;
}

ModuleData regular_module(const AlgebraData& a, Side side) {
  ModuleData m{side, a.dim, {}};
  for (std::size_t h = 0; h < a.dim; ++h) {
    Vec e = Vec::basis(a.field, a.dim, h);
    m.act.push_back(side == Side::Left ? a.left_mult(e) : a.right_mult(e));
  }
  return m;
}

}  // namespace wha
