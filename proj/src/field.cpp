#include "wha/field.hpp"

namespace wha {

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_of_mpz(const mpz_class& n, std::uint64_t p) {
  mpz_class r = n % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) {
    throw Error(Error::Kind::FieldError,
                "not a usable prime modulus: " + std::to_string(p));
  }
  Field f;
  f.p_ = p;
  return f;
}

std::string Field::str() const {
  return is_rational() ? "rational" : "prime " + std::to_string(p_);
}

Field Scalar::field_unchecked() const { return Field::prime(p_); }

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) {
    throw Error(Error::Kind::FieldError, "scalars from different fields");
  }
}

Scalar Scalar::zero(const Field& f) {
  Scalar s;
  s.p_ = f.characteristic();
  return s;
}

Scalar Scalar::one(const Field& f) { return of_int(1, f); }

Scalar Scalar::of_int(long n, const Field& f) {
  Scalar s = zero(f);
  if (f.is_rational()) {
    s.q_ = n;
  } else {
    long p = static_cast<long>(f.characteristic());
    long r = n % p;
    if (r < 0) r += p;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::fraction(const mpz_class& num, const mpz_class& den,
                        const Field& f) {
  if (den == 0) {
    throw Error(Error::Kind::FieldError, "zero denominator");
  }
  Scalar s = zero(f);
  if (f.is_rational()) {
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
  } else {
    std::uint64_t p = f.characteristic();
    std::uint64_t d = mod_of_mpz(den, p);
    if (d == 0) {
      throw Error(Error::Kind::FieldError,
                  "denominator vanishes modulo " + std::to_string(p));
    }
    s.r_ = mod_of_mpz(num, p) * mod_pow(d, p - 2, p) % p;
  }
  return s;
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ += o.q_;
  } else {
    s.r_ = (r_ + o.r_) % p_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ *= o.q_;
  } else {
    s.r_ = r_ * o.r_ % p_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b, Scalar& scratch) {
  if (p_ != a.p_ || p_ != b.p_) {
    throw Error(Error::Kind::FieldError, "scalars from different fields");
  }
  if (p_ != 0) {
    r_ = (r_ + a.r_ * b.r_) % p_;
    return;
  }
  mpq_mul(scratch.q_.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), scratch.q_.get_mpq_t());
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw Error(Error::Kind::FieldError, "division by zero");
  }
  Scalar s = *this;
  if (p_ == 0) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_pow(r_, p_ - 2, p_);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  require_same_field(o);
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(r_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_str();
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) {
    throw Error(Error::Kind::FieldError, "not a rational scalar");
  }
  return q_;
}

}  // namespace wha
