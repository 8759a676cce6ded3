#include "wha/linmap.hpp"

#include <sstream>

namespace wha {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw Error(Error::Kind::DimMismatch, msg);
}

}  // namespace

Vec Vec::basis(const Field& f, std::size_t n, std::size_t i) {
  Vec v(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : v_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Vec Vec::operator+(const Vec& o) const {
  require(size() == o.size(), "vector size mismatch in +");
  Vec r = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
  return r;
}

Vec Vec::operator-(const Vec& o) const {
  require(size() == o.size(), "vector size mismatch in -");
  Vec r = *this;
  for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] -= o.v_[i];
  return r;
}

Vec Vec::operator-() const {
  Vec r = *this;
  for (auto& s : r.v_) s = -s;
  return r;
}

Vec Vec::scaled(const Scalar& c) const {
  Vec r = *this;
  for (auto& s : r.v_) s *= c;
  return r;
}

Vec& Vec::operator+=(const Vec& o) { return *this = *this + o; }

Scalar Vec::dot(const Vec& o) const {
  require(size() == o.size(), "vector size mismatch in dot");
  Scalar acc = Scalar::zero(field_);
  Scalar scratch = acc;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!v_[i].is_zero() && !o.v_[i].is_zero())
      acc.add_product(v_[i], o.v_[i], scratch);
  }
  return acc;
}

bool Vec::operator==(const Vec& o) const {
  if (size() != o.size()) return false;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] != o.v_[i]) return false;
  }
  return true;
}

std::string Vec::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) os << ", ";
    os << v_[i].str();
  }
  os << ']';
  return os.str();
}

LinearMap LinearMap::identity(const Field& f, std::size_t n) {
  LinearMap m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

LinearMap LinearMap::from_columns(const Field& f, std::size_t rows,
                                  const std::vector<Vec>& columns) {
  LinearMap m(f, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require(columns[j].size() == rows, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

LinearMap LinearMap::from_rows(const Field& f, std::size_t cols,
                               const std::vector<Vec>& rows) {
  LinearMap m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec LinearMap::apply(const Vec& x) const {
  require(x.size() == cols_, "apply: dimension mismatch");
  Vec y(field_, rows_);
  Scalar scratch = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& m = e_[i * cols_ + j];
      if (!m.is_zero() && !x[j].is_zero()) y[i].add_product(m, x[j], scratch);
    }
  }
  return y;
}

Vec LinearMap::row(std::size_t i) const {
  Vec r(field_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

Vec LinearMap::column(std::size_t j) const {
  Vec c(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
  LinearMap r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
  LinearMap r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
  return r;
}

LinearMap LinearMap::scaled(const Scalar& c) const {
  LinearMap r = *this;
  for (auto& s : r.e_) s *= c;
  return r;
}

LinearMap& LinearMap::operator+=(const LinearMap& o) {
  return *this = *this + o;
}

bool LinearMap::is_zero() const {
  for (const auto& s : e_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < e_.size(); ++k) {
    if (e_[k] != o.e_[k]) return false;
  }
  return true;
}

std::string LinearMap::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << row(i).str();
  }
  os << ']';
  return os.str();
}

namespace {

inline void matmul_row(const LinearMap& a, const LinearMap& b, LinearMap& c,
                       std::size_t i) {
  // Accumulate into a private row with a reused scratch scalar: the inner
  // loop then runs allocation-free, which is what lets threads scale.
  std::vector<Scalar> acc(b.cols(), Scalar::zero(a.field()));
  Scalar scratch = Scalar::zero(a.field());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Scalar& aik = a.at(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const Scalar& bkj = b.at(k, j);
      if (!bkj.is_zero()) acc[j].add_product(aik, bkj, scratch);
    }
  }
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (!acc[j].is_zero()) c.at(i, j) = std::move(acc[j]);
  }
}

inline void kron_row_block(const LinearMap& a, const LinearMap& b,
                           LinearMap& k, std::size_t i) {
  // i indexes rows of a; fills the corresponding block row of the product.
  for (std::size_t p = 0; p < b.rows(); ++p) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t q = 0; q < b.cols(); ++q) {
        const Scalar& bpq = b.at(p, q);
        if (!bpq.is_zero())
          k.at(i * b.rows() + p, j * b.cols() + q) = aij * bpq;
      }
    }
  }
}

}  // namespace

LinearMap matmul(const LinearMap& a, const LinearMap& b) {
  require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
  LinearMap c(a.field(), a.rows(), b.cols());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows());
  const bool big = a.rows() * a.cols() * b.cols() >= 32768;
#pragma omp parallel for schedule(dynamic, 8) if (big)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    matmul_row(a, b, c, static_cast<std::size_t>(i));
  }
  return c;
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  LinearMap k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.rows());
  // One multiply per output entry: only worth fanning out when the
  // blocks are sizable.
  const bool big = a.rows() * b.rows() * a.cols() * b.cols() >= 262144;
#pragma omp parallel for schedule(dynamic, 4) if (big)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    kron_row_block(a, b, k, static_cast<std::size_t>(i));
  }
  return k;
}

Vec kron_vec(const Vec& u, const Vec& v) {
  Vec w(u.field(), u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) w[i * v.size() + j] = u[i] * v[j];
    }
  }
  return w;
}

namespace ref {

LinearMap matmul(const LinearMap& a, const LinearMap& b) {
  require(a.cols() == b.rows(), "matmul: inner dimension mismatch");
  LinearMap c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) matmul_row(a, b, c, i);
  return c;
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  LinearMap k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) kron_row_block(a, b, k, i);
  return k;
}

}  // namespace ref

}  // namespace wha
