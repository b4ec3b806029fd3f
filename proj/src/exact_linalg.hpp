#pragma once

// Small exact linear-algebra kernels over Q used by the cone code.

#include <optional>
#include <vector>

#include "lowdeg/arith.hpp"
#include "lowdeg/lattice.hpp"

namespace lowdeg::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_rational(const std::vector<DivisorClass>& rows);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols);

std::size_t matrix_rank(const std::vector<DivisorClass>& rows, std::size_t cols);

/// Primitive integer basis of {x : r.x = 0 for every row r} (standard dot
/// product), in a deterministic order.
std::vector<DivisorClass> integer_kernel(const std::vector<DivisorClass>& rows, std::size_t cols);

/// Coefficients c with sum c_i gens[i] = target, if target lies in the span.
/// `gens` must be linearly independent.
std::optional<std::vector<Rational>> span_coefficients(const std::vector<DivisorClass>& gens,
                                                       const DivisorClass& target);

/// Clears denominators of a rational vector and returns the primitive
/// integer vector with the same direction.
DivisorClass primitive_direction(const std::vector<Rational>& v);

Integer dot(const DivisorClass& a, const DivisorClass& b);

}  // namespace lowdeg::detail
