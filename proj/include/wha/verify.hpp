#pragma once

/**
 * @file verify.hpp
 * @brief Sweep driver for brute-force identity checks over basis tuples.
 *
 * Verifiers express an identity as "for every basis tuple, these two
 * tensors are equal"; the driver scans all tuples (OpenMP, with a serial
 * reference in wha::ref) and records the FIRST failing tuple in
 * lexicographic order, so failure witnesses are reproducible regardless
 * of thread count.
 */

#include <functional>
#include <optional>
#include <utility>

#include "wha/report.hpp"
#include "wha/tensor.hpp"

namespace wha {

/// Smallest index in [0, count) where ok() is false.
std::optional<std::size_t> first_violation(
    std::size_t count, const std::function<bool(std::size_t)>& ok);

namespace ref {
std::optional<std::size_t> first_violation(
    std::size_t count, const std::function<bool(std::size_t)>& ok);
}  // namespace ref

using TupleSides =
    std::function<std::pair<Tensor, Tensor>(const std::vector<std::size_t>&)>;

/// Checks sides(tuple).first == sides(tuple).second over the full cartesian
/// range and records one named result (with first counterexample) in rep.
void sweep_check(Report& rep, const std::string& name,
                 const std::vector<std::size_t>& ranges,
                 const TupleSides& sides);

/// Matrix equality as a named check; the witness is the first differing
/// column (a domain basis vector) with both image vectors.
void check_map_equal(Report& rep, const std::string& name, const LinearMap& a,
                     const LinearMap& b);

/// Equality of maps restricted to the image of a projector: a*p == b*p.
void check_map_equal_on(Report& rep, const std::string& name,
                        const LinearMap& a, const LinearMap& b,
                        const LinearMap& p);

std::vector<std::size_t> decode_tuple(std::size_t flat,
                                      const std::vector<std::size_t>& ranges);

/// Row-major flattening of a matrix, for matrix-valued sweep comparisons.
Tensor flatten_map(const LinearMap& m);

}  // namespace wha
