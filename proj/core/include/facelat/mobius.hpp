#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "facelat/poset.hpp"

namespace facelat {

/// Möbius function of a finite poset, filled one row mu(x, .) at a time on
/// first use. Safe to query from several threads.
class Mobius {
 public:
  /// Keeps a reference to `p`.
  explicit Mobius(const FinitePoset& p);
  explicit Mobius(FinitePoset&&) = delete;

  /// mu(x, y). Throws NotComparable unless x <= y.
  std::int64_t operator()(std::size_t x, std::size_t y) const;

 private:
  const std::vector<std::int64_t>& row(std::size_t x) const;

  const FinitePoset* poset_;
  std::vector<std::size_t> order_;
  mutable std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<std::vector<std::int64_t>> rows_;
};

/// One-shot convenience wrapper.
std::int64_t mobius(const FinitePoset& p, std::size_t x, std::size_t y);

}  // namespace facelat
