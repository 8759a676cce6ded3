#pragma once

/**
 * @file linmap.hpp
 * @brief Dense exact vectors and linear maps.
 *
 * Coordinate conventions used across the library:
 *  - vectors are columns; a LinearMap with r rows and c columns maps F^c
 *    to F^r by left multiplication;
 *  - tensor factors are paired row-major: e_i (x) e_j in V (x) W sits at
 *    flat index i * dim(W) + j, and kron() realizes f (x) g under exactly
 *    this pairing.
 *
 * The multiplication-shaped kernels (matmul, kron, and the sweep driver in
 * verify.hpp) run under OpenMP; the wha::ref namespace keeps the serial
 * reference implementations that the tests and the benchmark compare
 * against.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "wha/field.hpp"

namespace wha {

/// Dense coordinate vector over one field.
class Vec {
 public:
  Vec() : field_(Field::rationals()) {}
  Vec(const Field& f, std::size_t n) : field_(f), v_(n, Scalar::zero(f)) {}

  static Vec basis(const Field& f, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t size() const { return v_.size(); }

  Scalar& operator[](std::size_t i) { return v_[i]; }
  const Scalar& operator[](std::size_t i) const { return v_[i]; }

  bool is_zero() const;

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(const Scalar& c) const;
  Vec& operator+=(const Vec& o);

  /// Pairing sum_i a_i b_i (covector applied to a vector).
  Scalar dot(const Vec& o) const;

  bool operator==(const Vec& o) const;
  bool operator!=(const Vec& o) const { return !(*this == o); }

  /// "[a, b, c]" with canonical scalar spellings.
  std::string str() const;

 private:
  Field field_;
  std::vector<Scalar> v_;
};

/// Dense matrix of scalars; the sole representation of linear maps.
class LinearMap {
 public:
  LinearMap() : field_(Field::rationals()), rows_(0), cols_(0) {}
  LinearMap(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(rows * cols, Scalar::zero(f)) {}

  static LinearMap identity(const Field& f, std::size_t n);
  /// Builds the map whose j-th column is columns[j].
  static LinearMap from_columns(const Field& f, std::size_t rows,
                                const std::vector<Vec>& columns);
  static LinearMap from_rows(const Field& f, std::size_t cols,
                             const std::vector<Vec>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Vec apply(const Vec& x) const;
  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  LinearMap transpose() const;

  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap scaled(const Scalar& c) const;
  LinearMap& operator+=(const LinearMap& o);

  bool is_zero() const;
  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;  // row-major
};

/// Composition a after b (matrix product a*b). OpenMP over result rows.
LinearMap matmul(const LinearMap& a, const LinearMap& b);

/// Kronecker product under the row-major index pairing.
LinearMap kron(const LinearMap& a, const LinearMap& b);

/// Kronecker product of coordinate vectors: (u kron v)[i*|v|+j] = u_i v_j.
Vec kron_vec(const Vec& u, const Vec& v);

namespace ref {
/// Serial reference kernels; semantics identical to the parallel ones.
LinearMap matmul(const LinearMap& a, const LinearMap& b);
LinearMap kron(const LinearMap& a, const LinearMap& b);
}  // namespace ref

}  // namespace wha
