#include "facelat/linalg.hpp"

namespace facelat {

Echelon row_reduce(ExactMatrix rows, std::size_t cols) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const ExactScalar inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const ExactScalar f = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

ExactVector Echelon::coordinates(const ExactVector& v) const {
  ExactVector c(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) c[k] = v[pivots[k]];
  return c;
}

bool Echelon::contains(const ExactVector& v) const {
  ExactVector residual = v;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const ExactScalar f = residual[pivots[k]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= f * rows[k][j];
  }
  return is_zero(residual);
}

std::size_t rank(const ExactMatrix& rows, std::size_t cols) { return row_reduce(rows, cols).rank(); }

ExactMatrix nullspace(const ExactMatrix& rows, std::size_t cols) {
  const Echelon e = row_reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  ExactMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < e.rows.size(); ++k) v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool parallel(const ExactVector& a, const ExactVector& b) {
  if (a.size() != b.size() || is_zero(a) || is_zero(b)) return false;
  return rank({a, b}, a.size()) == 1;
}

}  // namespace facelat
