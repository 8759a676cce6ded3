#pragma once

/**
 * @file groupoid.hpp
 * @brief Finite groupoids and their algebras, the canonical examples of
 *        weak Hopf algebras.
 *
 * Composition convention: the product g h in the algebra is the
 * composite g o h, defined exactly when source(g) = target(h); otherwise
 * the product of basis morphisms is zero. The unit is the sum of the
 * object identities, Delta(g) = g (x) g, eps(g) = 1 and S(g) = g^{-1}.
 */

#include <cstddef>
#include <vector>

#include "wha/weakhopf.hpp"

namespace wha {

struct Groupoid {
  std::size_t n_objects = 0;
  std::vector<std::size_t> source, target;   // per morphism
  std::vector<std::size_t> inverse;          // per morphism
  std::vector<std::size_t> identity;         // per object
  // compose[g][h] = index of g o h, or -1 when source(g) != target(h)
  std::vector<std::vector<std::ptrdiff_t>> compose;

  std::size_t n_morphisms() const { return source.size(); }
  bool composable(std::size_t g, std::size_t h) const {
    return source[g] == target[h];
  }

  /// Checks every groupoid invariant; throws MalformedGroupoid with the
  /// offending morphism tuple in the message.
  void validate() const;
};

/// Z_n as a one-object groupoid.
Groupoid cyclic_group(std::size_t n);
/// k objects, identity morphisms only.
Groupoid discrete_groupoid(std::size_t k);
/// Pair groupoid on k objects: one morphism (x,y) : y -> x for each pair.
Groupoid pair_groupoid(std::size_t k);

WeakHopfAlgebra groupoid_algebra(const Groupoid& g, const Field& f);

}  // namespace wha
