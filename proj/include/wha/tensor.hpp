#pragma once

/**
 * @file tensor.hpp
 * @brief Elements of iterated tensor products V_0 (x) ... (x) V_{k-1} with
 *        structural operations.
 *
 * This is how Sweedler-notation computations are carried out everywhere in
 * the library: comultiplications expand one factor into several, actions
 * and multiplications contract adjacent factors, covectors evaluate a
 * factor away, and permute() reorders factors. All coordinates are dense
 * and row-major, matching kron().
 *
 * Example: h_(1) (x) eps_t(h_(2)) is
 *   Tensor::basis_element({n}, {h}, f).apply(Delta, 0, 2, {n, n})
 *                                     .apply(eps_t, 1, 1, {n}).
 */

#include <cstddef>
#include <vector>

#include "wha/linmap.hpp"

namespace wha {

class Tensor {
 public:
  /// Zero tensor with the given factor dimensions (empty dims = scalar).
  Tensor(std::vector<std::size_t> dims, const Field& f);
  /// Wraps existing flat coordinates.
  Tensor(std::vector<std::size_t> dims, Vec coords);

  static Tensor basis_element(const std::vector<std::size_t>& dims,
                              const std::vector<std::size_t>& index,
                              const Field& f);
  static Tensor from_vec(const Vec& v) { return Tensor({v.size()}, v); }
  static Tensor scalar(const Scalar& s);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t factors() const { return dims_.size(); }
  const Vec& coords() const { return coords_; }
  std::size_t flat_size() const { return coords_.size(); }

  /// Applies `m` to `consumed` adjacent factors starting at `first`,
  /// replacing them by factors of dimensions `new_dims`. Requires
  /// m.cols() == product of the consumed dims and m.rows() == product of
  /// new_dims (empty new_dims = the factors are evaluated away).
  Tensor apply(const LinearMap& m, std::size_t first, std::size_t consumed,
               const std::vector<std::size_t>& new_dims) const;

  /// Evaluates a covector against one factor.
  Tensor pair_with(const Vec& covector, std::size_t factor) const;

  /// Reorders factors: result factor i is the old factor perm[i].
  Tensor permute(const std::vector<std::size_t>& perm) const;

  /// Concatenation (this) (x) (other).
  Tensor tensor_with(const Tensor& other) const;

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scaled(const Scalar& c) const;
  bool is_zero() const { return coords_.is_zero(); }
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  std::string str() const { return coords_.str(); }

  /// The coordinates as a plain vector (for single-factor tensors this is
  /// the vector itself).
  const Vec& as_vec() const { return coords_; }
  Scalar as_scalar() const;

 private:
  std::vector<std::size_t> dims_;
  Vec coords_;
};

}  // namespace wha
