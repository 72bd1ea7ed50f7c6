#include "facelat/lp.hpp"

#include "facelat/error.hpp"

namespace facelat {

std::optional<ExactVector> find_nonnegative_solution(const ExactMatrix& a, const ExactVector& b) {
  const std::size_t m = b.size();
  const std::size_t k = m == 0 ? 0 : a.front().size();
  if (a.size() != m) throw Error(ErrorKind::DimensionMismatch, "constraint matrix and rhs disagree");
  if (m == 0) return ExactVector(k, 0);

  // Columns: k structural, m artificial, then rhs.
  const std::size_t n = k + m;
  ExactMatrix t(m, ExactVector(n + 1, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? ExactScalar(-a[i][j]) : a[i][j];
    t[i][k + i] = 1;
    t[i][n] = flip ? ExactScalar(-b[i]) : b[i];
    basis[i] = k + i;
  }

  // Reduced costs for minimizing the sum of artificials.
  ExactVector z(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    if (j >= k && j < n) continue;
    ExactScalar s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    z[j] = -s;
  }

  while (true) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;

    std::size_t leave = m;
    ExactScalar best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      ExactScalar ratio = t[i][n] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a
    // positive entry.
    if (leave == m) throw Error(ErrorKind::InternalInconsistency, "unbounded phase-one simplex");

    const ExactScalar piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const ExactScalar f = t[i][enter];
      for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      const ExactScalar f = z[enter];
      for (std::size_t j = 0; j <= n; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (z[n] != 0) return std::nullopt;

  ExactVector x(k, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) x[basis[i]] = t[i][n];
  }
  return x;
}

std::optional<ExactVector> find_strictly_positive_point(const ExactMatrix& rows, std::size_t cols) {
  if (rows.empty()) return ExactVector(cols, 0);
  // y = u - v with u, v >= 0; <r, u> - <r, v> - s = 1 with s >= 0.
  const std::size_t m = rows.size();
  ExactMatrix a(m, ExactVector(2 * cols + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[i][j] = rows[i][j];
      a[i][cols + j] = -rows[i][j];
    }
    a[i][2 * cols + i] = -1;
  }
  const auto sol = find_nonnegative_solution(a, ExactVector(m, 1));
  if (!sol) return std::nullopt;
  ExactVector y(cols);
  for (std::size_t j = 0; j < cols; ++j) y[j] = (*sol)[j] - (*sol)[cols + j];
  return y;
}

bool in_cone(const ExactMatrix& generators, const ExactVector& v) {
  if (generators.empty()) return is_zero(v);
  const std::size_t dim = v.size();
  ExactMatrix a(dim, ExactVector(generators.size()));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) a[i][j] = generators[j][i];
  }
  return find_nonnegative_solution(a, v).has_value();
}

}  // namespace facelat
