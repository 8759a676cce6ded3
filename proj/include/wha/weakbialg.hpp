#pragma once

/**
 * @file weakbialg.hpp
 * @brief Weak bialgebras: counital maps, target/source subalgebras,
 *        separability/Frobenius data, the truncated tensor product of
 *        modules and its monoidal structure.
 *
 * A weak bialgebra is an algebra-and-coalgebra whose comultiplication is
 * multiplicative while Delta(1) need not be 1 (x) 1; the weakened unit and
 * counit axioms are exactly the two displayed identities checked by
 * verify_weak_bialgebra. The counital maps are
 *   eps_t(h) = eps(1_(1) h) 1_(2),        eps_s(h) = 1_(1) eps(h 1_(2)),
 * the opposite-algebra variants carry a bar, and their images are the
 * target and source subalgebras.
 */

#include <optional>

#include "wha/algebra.hpp"
#include "wha/rref.hpp"
#include "wha/verify.hpp"

namespace wha {

class WeakBialgebra {
 public:
  AlgebraData alg;
  CoalgebraData coalg;

  // Cached counital data, computed from the defining formulas.
  LinearMap eps_t, eps_s, eps_t_bar, eps_s_bar;  // n x n projections
  Subspace target_space, source_space;           // H_t, H_s
  Vec delta_unit;                                // Delta(1) in H (x) H
  Vec sep_idem_t, sep_idem_s;                    // e_t, e_s in H (x) H
  LinearMap eps_pair;                            // eps_pair(a,b) = eps(e_a e_b)

  /// Computes every cache; throws DimMismatch when dims differ. Does not
  /// verify any axiom (see verify_weak_bialgebra).
  static WeakBialgebra build(AlgebraData a, CoalgebraData c);

  std::size_t dim() const { return alg.dim; }
  const Field& field() const { return alg.field; }

  Vec basis(std::size_t i) const { return Vec::basis(field(), dim(), i); }
  Vec mul(const Vec& a, const Vec& b) const { return alg.mul(a, b); }
  Scalar eps(const Vec& v) const { return coalg.eps(v); }

  Tensor delta_unit_tensor() const {
    return Tensor({dim(), dim()}, delta_unit);
  }
  /// Expands one tensor factor through the comultiplication.
  Tensor expand(const Tensor& t, std::size_t factor) const {
    return t.apply(coalg.comult, factor, 1, {dim(), dim()});
  }
  /// Contracts two adjacent factors through the multiplication.
  Tensor contract(const Tensor& t, std::size_t factor) const {
    return t.apply(alg.mult, factor, 2, {dim()});
  }
  Tensor basis_tensor(std::size_t i) const {
    return Tensor::basis_element({dim()}, {i}, field());
  }

  /// H_t as a left H-module (h action: z |-> eps_t(h z)) in echelon
  /// coordinates of the target space.
  ModuleData target_module() const;
  /// H_s as a right H-module (y |-> eps_s(y h)) in source-space
  /// coordinates; unit object for right-module truncated products.
  ModuleData source_module() const;
};

/// The counital projections, subalgebras and separability idempotents of a
/// built weak bialgebra.
struct CounitalData {
  const LinearMap& eps_t;
  const LinearMap& eps_s;
  const LinearMap& eps_t_bar;
  const LinearMap& eps_s_bar;
  const Subspace& target_space;
  const Subspace& source_space;
  const Vec& e_t;
  const Vec& e_s;
};

CounitalData counital_data(const WeakBialgebra& h);

/// Runs every named axiom and derived identity of a weak bialgebra
/// (algebra, coalgebra, the two weak axioms, counital identities,
/// target/source descriptions, separability and Frobenius data). Returns
/// the built object only when all checks pass.
std::pair<Report, std::optional<WeakBialgebra>> verify_weak_bialgebra(
    const AlgebraData& a, const CoalgebraData& c);

/// Truncated tensor product data: the projector Delta(1).(M (x) N) on the
/// ambient space, its echelon image, and the inclusion/retraction pair
/// identifying the image with coordinate space F^dim.
struct TruncatedTensor {
  std::size_t left_dim = 0, right_dim = 0;
  LinearMap projector;  // ambient x ambient
  Subspace image;
  LinearMap inc;  // ambient x dim
  LinearMap ret;  // dim x ambient, ret*inc = id, inc*ret = projector

  std::size_t ambient_dim() const { return left_dim * right_dim; }
  std::size_t dim() const { return image.dim(); }
};

/// Works for a pair of left modules (action of Delta(1) on the left) or a
/// pair of right modules (action on the right); both modules must sit on
/// the same side.
TruncatedTensor truncated_tensor(const WeakBialgebra& h, const ModuleData& m,
                                 const ModuleData& n);

/// Diagonal action of the coefficient vector h on M (x) N.
LinearMap diag_action(const WeakBialgebra& h, const ModuleData& m,
                      const ModuleData& n, const Vec& coeffs);
/// All basis actions at once.
ModuleData diag_module(const WeakBialgebra& h, const ModuleData& m,
                       const ModuleData& n);

/// Projector of the triple truncated product (the Delta^2(1) action).
LinearMap triple_projector(const WeakBialgebra& h, const ModuleData& m,
                           const ModuleData& n, const ModuleData& p);

/// Projector idempotence, commutation with the diagonal action, and
/// associativity of the truncated product on a triple.
Report verify_truncated_tensor(const WeakBialgebra& h, const ModuleData& m,
                               const ModuleData& n);

/// Left/right unit constraints of Prop-style monoidal structure on left
/// modules: l: H_t (x)_t M -> M and r: M (x)_t H_t -> M with their
/// inverses, all in ambient coordinates.
struct UnitConstraints {
  TruncatedTensor ht_m, m_ht;
  LinearMap l, l_inv, r, r_inv;
};

UnitConstraints unit_constraints(const WeakBialgebra& h, const ModuleData& m);

/// Inverse laws, H-linearity of l and r, and the formulas themselves.
Report verify_unit_constraints(const WeakBialgebra& h, const ModuleData& m);

/// Triangle coherence (r_M (x) N) o a = M (x) l_N on the corpus triple.
Report verify_triangle(const WeakBialgebra& h, const ModuleData& m,
                       const ModuleData& n);

/// The comparison between M (x)_{H_t} N (the quotient by m.z (x) n -
/// m (x) z.n with m.z = eps_s_bar(z) m) and the truncated product.
struct HtTensorComparison {
  Quotient quotient;
  TruncatedTensor trunc;
  LinearMap pibar;      // quotient coords -> truncated coords
  LinearMap pibar_inv;  // truncated coords -> quotient coords
};

HtTensorComparison tensor_over_ht(const WeakBialgebra& h, const ModuleData& m,
                                  const ModuleData& n);

/// Bijectivity of pibar, well-definedness, and H_t-linearity.
Report verify_tensor_over_ht(const WeakBialgebra& h, const ModuleData& m,
                             const ModuleData& n);

}  // namespace wha
