#pragma once

#include <cstddef>
#include <vector>

#include "facelat/exact.hpp"

namespace facelat {

/// Reduced row echelon form of a set of row vectors. `rows` holds only the
/// nonzero rows; `pivots[k]` is the pivot column of `rows[k]`, and every
/// other row is zero in that column.
struct Echelon {
  ExactMatrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }

  /// Coordinates of `v` in the basis `rows`. Only meaningful when v lies in
  /// the row space (then v = sum_k coords[k] * rows[k]).
  ExactVector coordinates(const ExactVector& v) const;

  /// True iff v is in the row space.
  bool contains(const ExactVector& v) const;
};

Echelon row_reduce(ExactMatrix rows, std::size_t cols);

std::size_t rank(const ExactMatrix& rows, std::size_t cols);

/// Basis of { x : <r, x> = 0 for every row r } in Q^cols.
ExactMatrix nullspace(const ExactMatrix& rows, std::size_t cols);

/// True iff a and b are nonzero scalar multiples of each other.
bool parallel(const ExactVector& a, const ExactVector& b);

}  // namespace facelat
