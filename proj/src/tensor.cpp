#include "wha/tensor.hpp"

#include <numeric>

namespace wha {

namespace {

std::size_t product(const std::vector<std::size_t>& dims, std::size_t lo,
                    std::size_t hi) {
  std::size_t p = 1;
  for (std::size_t i = lo; i < hi; ++i) p *= dims[i];
  return p;
}

void require(bool cond, const char* msg) {
  if (!cond) throw Error(Error::Kind::DimMismatch, msg);
}

}  // namespace

Tensor::Tensor(std::vector<std::size_t> dims, const Field& f)
    : dims_(std::move(dims)), coords_(f, product(dims_, 0, dims_.size())) {}

Tensor::Tensor(std::vector<std::size_t> dims, Vec coords)
    : dims_(std::move(dims)), coords_(std::move(coords)) {
  require(coords_.size() == product(dims_, 0, dims_.size()),
          "tensor coordinate size mismatch");
}

Tensor Tensor::basis_element(const std::vector<std::size_t>& dims,
                             const std::vector<std::size_t>& index,
                             const Field& f) {
  require(dims.size() == index.size(), "basis_element: index arity");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    flat = flat * dims[i] + index[i];
  }
  Tensor t(dims, f);
  t.coords_[flat] = Scalar::one(f);
  return t;
}

Tensor Tensor::scalar(const Scalar& s) {
  Vec v(s.field(), 1);
  v[0] = s;
  return Tensor({}, v);
}

Tensor Tensor::apply(const LinearMap& m, std::size_t first,
                     std::size_t consumed,
                     const std::vector<std::size_t>& new_dims) const {
  require(first + consumed <= dims_.size(), "apply: factor range");
  const std::size_t pre = product(dims_, 0, first);
  const std::size_t mid_in = product(dims_, first, first + consumed);
  const std::size_t post = product(dims_, first + consumed, dims_.size());
  require(m.cols() == mid_in, "apply: map input dimension");
  const std::size_t mid_out =
      std::accumulate(new_dims.begin(), new_dims.end(), std::size_t{1},
                      std::multiplies<>());
  require(m.rows() == mid_out, "apply: map output dimension");

  std::vector<std::size_t> out_dims(dims_.begin(),
                                    dims_.begin() + static_cast<long>(first));
  out_dims.insert(out_dims.end(), new_dims.begin(), new_dims.end());
  out_dims.insert(out_dims.end(),
                  dims_.begin() + static_cast<long>(first + consumed),
                  dims_.end());
  Tensor out(out_dims, coords_.field());

  Scalar scratch = Scalar::zero(coords_.field());
  for (std::size_t p = 0; p < pre; ++p) {
    for (std::size_t q = 0; q < post; ++q) {
      for (std::size_t a = 0; a < mid_in; ++a) {
        const Scalar& x = coords_[(p * mid_in + a) * post + q];
        if (x.is_zero()) continue;
        for (std::size_t b = 0; b < mid_out; ++b) {
          const Scalar& c = m.at(b, a);
          if (!c.is_zero())
            out.coords_[(p * mid_out + b) * post + q].add_product(c, x,
                                                                  scratch);
        }
      }
    }
  }
  return out;
}

Tensor Tensor::pair_with(const Vec& covector, std::size_t factor) const {
  LinearMap row = LinearMap::from_rows(coords_.field(), covector.size(),
                                       std::vector<Vec>{covector});
  return apply(row, factor, 1, {});
}

Tensor Tensor::permute(const std::vector<std::size_t>& perm) const {
  require(perm.size() == dims_.size(), "permute: arity");
  std::vector<std::size_t> out_dims(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out_dims[i] = dims_[perm[i]];
  Tensor out(out_dims, coords_.field());

  const std::size_t k = dims_.size();
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t flat = 0; flat < coords_.size(); ++flat) {
    if (!coords_[flat].is_zero()) {
      std::size_t out_flat = 0;
      for (std::size_t i = 0; i < k; ++i) {
        out_flat = out_flat * out_dims[i] + idx[perm[i]];
      }
      out.coords_[out_flat] = coords_[flat];
    }
    // advance the multi-index
    for (std::size_t i = k; i-- > 0;) {
      if (++idx[i] < dims_[i]) break;
      idx[i] = 0;
    }
  }
  return out;
}

Tensor Tensor::tensor_with(const Tensor& other) const {
  std::vector<std::size_t> out_dims = dims_;
  out_dims.insert(out_dims.end(), other.dims_.begin(), other.dims_.end());
  return Tensor(out_dims, kron_vec(coords_, other.coords_));
}

Tensor Tensor::operator+(const Tensor& o) const {
  require(dims_ == o.dims_, "tensor shape mismatch in +");
  return Tensor(dims_, coords_ + o.coords_);
}

Tensor Tensor::operator-(const Tensor& o) const {
  require(dims_ == o.dims_, "tensor shape mismatch in -");
  return Tensor(dims_, coords_ - o.coords_);
}

Tensor Tensor::scaled(const Scalar& c) const {
  return Tensor(dims_, coords_.scaled(c));
}

bool Tensor::operator==(const Tensor& o) const {
  return dims_ == o.dims_ && coords_ == o.coords_;
}

Scalar Tensor::as_scalar() const {
  require(coords_.size() == 1, "as_scalar: not a scalar tensor");
  return coords_[0];
}

}  // namespace wha
