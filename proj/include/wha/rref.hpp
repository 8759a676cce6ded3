#pragma once

/**
 * @file rref.hpp
 * @brief Exact row reduction, subspaces in reduced echelon form, and
 *        linear solving.
 *
 * Pivoting is deterministic (leftmost nonzero, first eligible row) so
 * every basis, kernel and solution this file produces is reproducible
 * bit for bit.
 */

#include <optional>
#include <vector>

#include "wha/linmap.hpp"

namespace wha {

struct RrefResult {
  LinearMap mat;                    // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank;
};

/// Reduced row echelon form. Elimination below/above the pivot row is
/// OpenMP-parallel; the pivot scan itself is sequential by nature.
RrefResult rref(const LinearMap& m);

namespace ref {
RrefResult rref(const LinearMap& m);  // serial reference
}

/// A linear subspace of F^ambient, stored as RREF rows (leftmost pivot
/// first). Representation is canonical, so equality of subspaces is
/// equality of bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  Subspace(const Field& f, std::size_t ambient)
      : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

  static Subspace from_span(const Field& f, std::size_t ambient,
                            const std::vector<Vec>& spanning);
  /// Column space of m.
  static Subspace image(const LinearMap& m);
  /// Null space {x : m x = 0}.
  static Subspace kernel(const LinearMap& m);
  static Subspace full(const Field& f, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Echelon basis, one vector per row.
  const LinearMap& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Residual of v after eliminating along the basis; zero iff v lies in
  /// the subspace.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the echelon basis, if v is a member.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// ambient x dim inclusion whose columns are the basis vectors.
  LinearMap inclusion() const;
  /// dim x ambient retraction with retraction * inclusion = id; on members
  /// it reads off echelon coordinates (the pivot entries).
  LinearMap retraction() const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  Field field_;
  std::size_t ambient_;
  LinearMap basis_;  // dim x ambient, RREF
  std::vector<std::size_t> pivots_;
};

/// Exact solution set of A x = b: empty, or a particular solution (zeros in
/// the free coordinates) together with the kernel of A.
struct SolutionSet {
  enum class Kind { Empty, Unique, Affine };
  Kind kind = Kind::Empty;
  std::optional<Vec> particular;
  Subspace kernel;

  bool empty() const { return kind == Kind::Empty; }
};

SolutionSet solve_linear(const LinearMap& a, const Vec& b);

/// (column space, kernel) of m, both as echelon subspaces.
std::pair<Subspace, Subspace> rref_and_kernel(const LinearMap& m);

/// Quotient of F^ambient by a subspace of relations. Classes are
/// coordinatized by the non-pivot coordinates of the relation space.
class Quotient {
 public:
  Quotient(const Field& f, std::size_t ambient, const Subspace& relations);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return free_.size(); }
  const Subspace& relations() const { return relations_; }

  /// dim x ambient projection onto quotient coordinates.
  const LinearMap& projection() const { return projection_; }
  /// ambient x dim section picking the canonical representative of each
  /// class; projection * section = id.
  const LinearMap& section() const { return section_; }

 private:
  std::size_t ambient_;
  Subspace relations_;
  std::vector<std::size_t> free_;
  LinearMap projection_, section_;
};

}  // namespace wha
