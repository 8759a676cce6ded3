#include "wha/rref.hpp"

#include <algorithm>

namespace wha {

namespace {

// Eliminates column `col` from every row except `prow`, assuming
// m(prow, col) == 1. Row updates are independent.
void eliminate_column(LinearMap& m, std::size_t prow, std::size_t col,
                      bool parallel) {
  const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(m.rows());
  const bool big = m.rows() * m.cols() >= 4096;
#pragma omp parallel for schedule(dynamic, 16) if (parallel && big)
  for (std::ptrdiff_t r = 0; r < rows; ++r) {
    const std::size_t i = static_cast<std::size_t>(r);
    if (i == prow) continue;
    Scalar neg_factor = -m.at(i, col);
    if (neg_factor.is_zero()) continue;
    Scalar scratch = Scalar::zero(m.field());
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m.at(prow, j).is_zero())
        m.at(i, j).add_product(neg_factor, m.at(prow, j), scratch);
    }
    m.at(i, col) = Scalar::zero(m.field());
  }
}

RrefResult rref_impl(const LinearMap& input, bool parallel) {
  LinearMap m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = col; j < m.cols(); ++j)
        std::swap(m.at(row, j), m.at(sel, j));
    }
    Scalar inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
    }
    eliminate_column(m, row, col, parallel);
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{std::move(m), std::move(pivots), row};
}

}  // namespace

RrefResult rref(const LinearMap& m) { return rref_impl(m, true); }

namespace ref {
RrefResult rref(const LinearMap& m) { return rref_impl(m, false); }
}  // namespace ref

Subspace Subspace::from_span(const Field& f, std::size_t ambient,
                             const std::vector<Vec>& spanning) {
  LinearMap rows = LinearMap::from_rows(f, ambient, spanning);
  RrefResult r = rref(rows);
  Subspace s(f, ambient);
  s.basis_ = LinearMap(f, r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < ambient; ++j)
      s.basis_.at(i, j) = r.mat.at(i, j);
  s.pivots_.assign(r.pivots.begin(), r.pivots.begin() + r.rank);
  return s;
}

Subspace Subspace::image(const LinearMap& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return from_span(m.field(), m.rows(), cols);
}

Subspace Subspace::kernel(const LinearMap& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(f, m.cols());
    v[c] = Scalar::one(f);
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivots[i]] = -r.mat.at(i, c);
    }
    basis.push_back(v);
  }
  return from_span(f, m.cols(), basis);
}

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  Subspace s(f, ambient);
  s.basis_ = LinearMap::identity(f, ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = r[pivots_[i]];
    if (c.is_zero()) continue;
    Scalar factor = c;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_.at(i, j).is_zero()) r[j] -= factor * basis_.at(i, j);
    }
  }
  return r;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(field_, dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

LinearMap Subspace::inclusion() const { return basis_.transpose(); }

LinearMap Subspace::retraction() const {
  LinearMap r(field_, dim(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i)
    r.at(i, pivots_[i]) = Scalar::one(field_);
  return r;
}

SolutionSet solve_linear(const LinearMap& a, const Vec& b) {
  if (a.rows() != b.size()) {
    throw Error(Error::Kind::DimMismatch, "solve_linear: rhs length");
  }
  const Field& f = a.field();
  LinearMap aug(f, a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  for (std::size_t i = 0; i < r.rank; ++i) {
    if (r.pivots[i] == a.cols()) return SolutionSet{};  // 0 = 1 row
  }
  Vec x(f, a.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    x[r.pivots[i]] = r.mat.at(i, a.cols());
  }
  SolutionSet s;
  s.particular = x;
  s.kernel = Subspace::kernel(a);
  s.kind = s.kernel.dim() == 0 ? SolutionSet::Kind::Unique
                               : SolutionSet::Kind::Affine;
  return s;
}

std::pair<Subspace, Subspace> rref_and_kernel(const LinearMap& m) {
  return {Subspace::image(m), Subspace::kernel(m)};
}

Quotient::Quotient(const Field& f, std::size_t ambient,
                   const Subspace& relations)
    : ambient_(ambient), relations_(relations) {
  std::vector<bool> is_pivot(ambient, false);
  for (std::size_t p : relations.pivots()) is_pivot[p] = true;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (!is_pivot[c]) free_.push_back(c);
  }
  projection_ = LinearMap(f, free_.size(), ambient);
  for (std::size_t j = 0; j < ambient; ++j) {
    Vec col = relations.reduce(Vec::basis(f, ambient, j));
    for (std::size_t i = 0; i < free_.size(); ++i)
      projection_.at(i, j) = col[free_[i]];
  }
  section_ = LinearMap(f, ambient, free_.size());
  for (std::size_t i = 0; i < free_.size(); ++i)
    section_.at(free_[i], i) = Scalar::one(f);
}

}  // namespace wha
