#pragma once

/**
 * @file field.hpp
 * @brief Exact scalar arithmetic over Q (arbitrary-precision rationals) or
 *        a prime field F_p.
 *
 * Every scalar is tagged with its field; mixing fields throws. Rational
 * arithmetic is backed by GMP and always kept in lowest terms, so equality
 * is exact and printing is canonical. Prime fields store a canonical
 * residue in [0, p).
 */

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "wha/errors.hpp"

namespace wha {

/// Field descriptor: the rationals (characteristic 0) or F_p, p prime.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(); }

  /// Throws FieldError unless 1 < p < 2^31 and p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  std::string str() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint64_t p_;
};

/// One exact field element. Value-semantic and immutable in practice:
/// arithmetic returns fresh scalars.
class Scalar {
 public:
  /// Rational zero. Prefer zero(field) when a field descriptor is in scope.
  Scalar() : r_(0), p_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(long n, const Field& f);
  /// num/den, reduced (Q) or mapped to num * den^{-1} (F_p).
  /// Throws FieldError on zero denominator.
  static Scalar fraction(const mpz_class& num, const mpz_class& den,
                         const Field& f);

  Field field() const { return p_ == 0 ? Field::rationals() : field_unchecked(); }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws FieldError on division by zero.
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const;

  /// this += a * b, reusing `scratch` for the intermediate product so hot
  /// loops run without fresh allocations.
  void add_product(const Scalar& a, const Scalar& b, Scalar& scratch);

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Canonical form: "n" or "n/d" over Q, the residue over F_p.
  std::string str() const;

  /// Rational value (Q scalars only).
  const mpq_class& rational() const;

 private:
  Field field_unchecked() const;
  void require_same_field(const Scalar& o) const;

  mpq_class q_;        // value when p_ == 0
  std::uint64_t r_;    // residue when p_ != 0
  std::uint64_t p_;    // 0 marks a rational
};

}  // namespace wha
