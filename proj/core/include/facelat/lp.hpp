#pragma once

#include <optional>

#include "facelat/exact.hpp"

namespace facelat {

/// Exact phase-one simplex (Bland's rule): returns some x >= 0 with
/// A x = b, or nullopt when the system is infeasible. A is m x k row-major.
std::optional<ExactVector> find_nonnegative_solution(const ExactMatrix& a, const ExactVector& b);

/// Returns y with <rows[i], y> >= 1 for every i, y unrestricted in sign, or
/// nullopt. With homogeneous data this decides strict feasibility of
/// <rows[i], y> > 0.
std::optional<ExactVector> find_strictly_positive_point(const ExactMatrix& rows, std::size_t cols);

/// Membership of v in the cone generated by `generators` (nonnegative
/// combinations). The empty cone is {0}.
bool in_cone(const ExactMatrix& generators, const ExactVector& v);

}  // namespace facelat
