#pragma once

/**
 * @file weakhopf.hpp
 * @brief Weak Hopf algebras: antipodes (solving and verifying), the dual
 *        weak Hopf algebra, and the dual-pairing actions.
 *
 * The antipode axioms are the convolution identities
 *   S * id = eps_s,  id * S = eps_t,  S * id * S = S,
 * with f * g = mu o (f (x) g) o Delta. The antipode is always stored with
 * its inverse (bijectivity is part of the construction contract).
 */

#include "wha/weakbialg.hpp"

namespace wha {

class WeakHopfAlgebra {
 public:
  WeakBialgebra base;
  LinearMap antipode, antipode_inv;

  std::size_t dim() const { return base.dim(); }
  const Field& field() const { return base.field(); }
  Vec basis(std::size_t i) const { return base.basis(i); }
  Vec mul(const Vec& a, const Vec& b) const { return base.mul(a, b); }
  Scalar eps(const Vec& v) const { return base.eps(v); }
  Vec s(const Vec& v) const { return antipode.apply(v); }
  Vec s_inv(const Vec& v) const { return antipode_inv.apply(v); }
};

/// mu o (f (x) g) o Delta.
LinearMap convolution(const WeakBialgebra& h, const LinearMap& f,
                      const LinearMap& g);

struct AntipodeSolution {
  enum class Status { Found, NotFound, Ambiguous, NotBijective };
  Status status = Status::NotFound;
  std::optional<LinearMap> antipode;      // Found
  std::optional<LinearMap> antipode_inv;  // Found
  // Ambiguous: the affine solution set of the linear subsystem.
  std::optional<LinearMap> particular;
  std::optional<Subspace> freedom;
  std::string detail;
};

/// Solves the two linear convolution conditions for S, then checks the
/// quadratic axiom and bijectivity. Underdetermined systems surface as
/// Ambiguous (the affine set is reported, not searched).
AntipodeSolution solve_antipode(const WeakBialgebra& h);

/// Every displayed identity of the antipode section: (1.3.x), (1.4.x),
/// (1.6.x), (1.7.1), (1.9.2)-(1.9.4), the anti-(co)algebra laws and the
/// restriction of S to the target/source subalgebras.
Report verify_weak_hopf(const WeakHopfAlgebra& h);

/// The dual weak Hopf algebra on the coordinate dual basis: multiplication
/// is convolution, comultiplication dualizes multiplication, the antipode
/// is the transpose.
WeakHopfAlgebra dual_weak_hopf(const WeakHopfAlgebra& h);

/// h -> (hit) h* (hit-from) k, i.e. the covector l |-> <h*, k l h>.
Vec hit_action(const WeakHopfAlgebra& h, const Vec& hv, const Vec& hstar,
               const Vec& kv);

/// Opposite algebra, same coalgebra; the antipode becomes S^{-1}.
WeakHopfAlgebra opposite(const WeakHopfAlgebra& h);

/// Componentwise tensor product of weak Hopf algebras.
WeakHopfAlgebra hopf_tensor(const WeakHopfAlgebra& a, const WeakHopfAlgebra& b);

/// Exact inverse; nullopt when the matrix is singular.
std::optional<LinearMap> inverse_map(const LinearMap& m);

/// The four-dimensional Hopf algebra generated by a grouplike g and a
/// skew-primitive x with g^2 = 1, x^2 = 0 and x g = -g x. Its antipode
/// satisfies S^2(x) = -x, which makes it the smallest example separating
/// S from S^{-1}; basis order 1, g, x, gx.
WeakHopfAlgebra sweedler_algebra(const Field& f);

}  // namespace wha
