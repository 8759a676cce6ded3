#pragma once

/**
 * @file entwining.hpp
 * @brief Preunital algebras, weak smash product structures, weak entwining
 *        structures and weak Doi-Hopf data.
 *
 * A preunit e of a possibly non-unital algebra satisfies ea = ae = ae^2;
 * right multiplication by e is then a multiplicative projection p whose
 * image is a unital algebra with unit e^2. Weak smash products A #_R B
 * carry the twisted product (a # b)(c # d) = a c_R # b_R d and have
 * preunit 1_A # 1_B exactly when the four R-laws hold.
 */

#include "wha/weakhopf.hpp"

namespace wha {

struct PreunitalAlgebra {
  Field field;
  std::size_t dim = 0;
  LinearMap mult;  // dim x dim^2, need not be unital
  Vec preunit;     // e
  LinearMap p;     // a |-> a e
  Subspace image;  // Im(p)
  LinearMap inc;   // ambient x r
  LinearMap ret;   // r x ambient, ret*inc = id, inc*ret = p

  Vec mul(const Vec& a, const Vec& b) const;
};

/// Builds the projection data; the named checks (preunit law, idempotence
/// and multiplicativity of p, unitality and associativity of the image)
/// land in the report. The object is returned even on failure so faults
/// can be inspected.
std::pair<Report, PreunitalAlgebra> make_preunital(const Field& f,
                                                   const LinearMap& mult,
                                                   const Vec& preunit);

/// The unital quotient A/Ker p presented on Im(p) coordinates.
struct UnitalQuotient {
  AlgebraData algebra;  // on Im(p) coordinates, unit e^2
  LinearMap project;    // r x dim, the quotient map a |-> [a]
  LinearMap include;    // dim x r, canonical representatives
};

UnitalQuotient preunit_quotient(const PreunitalAlgebra& pa);
/// Ker p is an ideal, the induced multiplication is well defined,
/// and the quotient is an associative unital algebra.
Report verify_preunit_quotient(const PreunitalAlgebra& pa);

struct WeakSmashStructure {
  AlgebraData a, b;
  LinearMap r;  // B (x) A -> A (x) B
};

/// The two multiplicativity laws and the two preunit laws for R.
Report verify_smash_structure(const WeakSmashStructure& s);

/// The twisted algebra A #_R B with preunit 1_A # 1_B; the report carries
/// the R-laws, associativity on all basis triples, and the preunit checks.
std::pair<Report, PreunitalAlgebra> smash_product(const WeakSmashStructure& s);

struct WeakEntwining {
  AlgebraData a;
  CoalgebraData c;
  LinearMap psi;  // A (x) C -> A (x) C
};

/// The four weak entwining axioms on all basis pairs.
Report verify_weak_entwining(const WeakEntwining& e);

/// A left-right weak Doi-Hopf datum: an acting weak Hopf algebra H', a
/// right H'-comodule algebra A and a left H'-module coalgebra C.
struct DoiHopfDatum {
  WeakHopfAlgebra hp;   // H'
  AlgebraData a;        // comodule algebra
  LinearMap coaction;   // A -> A (x) H'
  CoalgebraData c;      // module coalgebra
  ModuleData action;    // left H'-action on C
};

/// Comodule-algebra laws (multiplicativity, coassociativity, counit, the
/// unit-target condition) and module-coalgebra laws.
Report verify_doihopf(const DoiHopfDatum& d);

/// psi(a (x) c) = a_[0] (x) a_[1] c.
WeakEntwining doihopf_to_entwining(const DoiHopfDatum& d);

/// The canonical datum (H^op (x) H, H, H): H coacts on itself by
/// h |-> h_(2) (x) (S^{-1}(h_(1)) (x) h_(3)) and acts on itself by
/// (k (x) h) |> c = h c k.
DoiHopfDatum canonical_yd_datum(const WeakHopfAlgebra& h);

/// psi(h (x) k) = h_(2) (x) h_(3) k S^{-1}(h_(1)), the entwining map of the
/// canonical datum written directly.
LinearMap canonical_entwining_psi(const WeakHopfAlgebra& h);

/// Compatibility rho(a m) = a_psi m_[0] (x) m_[1]^psi on all basis pairs,
/// for a module-plus-comodule (left A-action, right C-coaction).
Report entwined_module_check(const WeakEntwining& e, const ModuleData& action,
                             const LinearMap& coaction);

/// The smash structure induced by an entwining through the dual coalgebra:
/// R(c* (x) a) = sum_i <c*, c_i^psi> a_psi (x) c_i^*.
LinearMap smash_r_from_entwining(const WeakEntwining& e);

}  // namespace wha
