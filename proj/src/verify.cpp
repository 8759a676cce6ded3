#include "wha/verify.hpp"

#include <atomic>

namespace wha {

std::optional<std::size_t> first_violation(
    std::size_t count, const std::function<bool(std::size_t)>& ok) {
  std::atomic<std::size_t> best{count};
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 16) if (count >= 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    if (!ok(idx)) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur &&
             !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
      }
    }
  }
  std::size_t found = best.load();
  if (found == count) return std::nullopt;
  return found;
}

namespace ref {

std::optional<std::size_t> first_violation(
    std::size_t count, const std::function<bool(std::size_t)>& ok) {
  for (std::size_t i = 0; i < count; ++i) {
    if (!ok(i)) return i;
  }
  return std::nullopt;
}

}  // namespace ref

std::vector<std::size_t> decode_tuple(std::size_t flat,
                                      const std::vector<std::size_t>& ranges) {
  std::vector<std::size_t> idx(ranges.size());
  for (std::size_t i = ranges.size(); i-- > 0;) {
    idx[i] = flat % ranges[i];
    flat /= ranges[i];
  }
  return idx;
}

void sweep_check(Report& rep, const std::string& name,
                 const std::vector<std::size_t>& ranges,
                 const TupleSides& sides) {
  std::size_t count = 1;
  for (std::size_t r : ranges) count *= r;
  auto ok = [&](std::size_t flat) {
    auto [lhs, rhs] = sides(decode_tuple(flat, ranges));
    return lhs == rhs;
  };
  auto bad = first_violation(count, ok);
  if (!bad) {
    rep.pass(name);
    return;
  }
  auto tuple = decode_tuple(*bad, ranges);
  auto [lhs, rhs] = sides(tuple);
  rep.fail(name, Witness{tuple, lhs.str(), rhs.str()});
}

void check_map_equal(Report& rep, const std::string& name, const LinearMap& a,
                     const LinearMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    rep.fail(name, Witness{{},
                           "shape " + std::to_string(a.rows()) + "x" +
                               std::to_string(a.cols()),
                           "shape " + std::to_string(b.rows()) + "x" +
                               std::to_string(b.cols())});
    return;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Vec ca = a.column(j), cb = b.column(j);
    if (ca != cb) {
      rep.fail(name, Witness{{j}, ca.str(), cb.str()});
      return;
    }
  }
  rep.pass(name);
}

void check_map_equal_on(Report& rep, const std::string& name,
                        const LinearMap& a, const LinearMap& b,
                        const LinearMap& p) {
  check_map_equal(rep, name, matmul(a, p), matmul(b, p));
}

Tensor flatten_map(const LinearMap& m) {
  Vec v(m.field(), m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m.at(i, j);
  return Tensor::from_vec(v);
}

}  // namespace wha
