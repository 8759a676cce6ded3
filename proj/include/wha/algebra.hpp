#pragma once

/**
 * @file algebra.hpp
 * @brief Finite-dimensional algebras, coalgebras and modules by structure
 *        constants.
 *
 * An algebra is the map mu: H (x) H -> H (dim x dim^2, column i*dim+j
 * holding e_i e_j) plus the unit vector; a coalgebra is Delta: H -> H (x) H
 * (dim^2 x dim) plus the counit covector. Modules store one action matrix
 * per algebra basis element.
 */

#include <vector>

#include "wha/report.hpp"
#include "wha/tensor.hpp"

namespace wha {

struct AlgebraData {
  Field field;
  std::size_t dim = 0;
  LinearMap mult;  // dim x dim^2
  Vec unit;

  Vec basis_product(std::size_t i, std::size_t j) const {
    return mult.column(i * dim + j);
  }
  Vec mul(const Vec& a, const Vec& b) const;
  /// Matrix of x |-> a x.
  LinearMap left_mult(const Vec& a) const;
  /// Matrix of x |-> x a.
  LinearMap right_mult(const Vec& a) const;
};

struct CoalgebraData {
  Field field;
  std::size_t dim = 0;
  LinearMap comult;  // dim^2 x dim
  Vec counit;        // covector

  Scalar eps(const Vec& v) const { return counit.dot(v); }
};

/// Associativity and unit laws, one named check each.
Report verify_algebra(const AlgebraData& a);
/// Coassociativity and both counit laws.
Report verify_coalgebra(const CoalgebraData& c);

/// Componentwise tensor product (a (x) b)(c (x) d) = ac (x) bd.
AlgebraData algebra_tensor(const AlgebraData& a, const AlgebraData& b);
/// Opposite multiplication.
AlgebraData algebra_opposite(const AlgebraData& a);
/// Delta(x (x) y) = (id (x) swap (x) id)(Delta x (x) Delta y).
CoalgebraData coalgebra_tensor(const CoalgebraData& a, const CoalgebraData& b);

enum class Side { Left, Right };

/// Module given by explicit action matrices act[h] per algebra basis
/// element. For right modules act[h] is the matrix of m |-> m.e_h.
struct ModuleData {
  Side side = Side::Left;
  std::size_t dim = 0;
  std::vector<LinearMap> act;

  LinearMap action_of(const Vec& coeffs) const;
  /// Left: dim x (adim*dim) flattening of the action H (x) M -> M.
  /// Right: dim x (dim*adim) flattening of M (x) H -> M.
  LinearMap flat(std::size_t adim) const;
};

/// Module axioms: composition law and unitality.
Report verify_module(const AlgebraData& a, const ModuleData& m);

ModuleData regular_module(const AlgebraData& a, Side side);

}  // namespace wha
