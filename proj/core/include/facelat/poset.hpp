#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "facelat/bitset.hpp"

namespace facelat {

using CoverEdge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

/// A finite partial order on {0, ..., n-1}. Callers keep their own element
/// labels; the poset only sees indices.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Materializes `leq` (the diagonal is implied). Throws NotAntisymmetric
  /// or NotTransitive naming a witness pair/triple.
  static FinitePoset from_leq(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

  /// Reflexive-transitive closure of the given directed edges. Throws
  /// NotAntisymmetric if the edges contain a cycle.
  static FinitePoset from_covers(std::size_t n, const std::vector<CoverEdge>& edges);

  std::size_t size() const noexcept { return up_.size(); }

  bool leq(std::size_t x, std::size_t y) const { return up_[x].test(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && up_[x].test(y); }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  /// { y : x <= y } and { y : y <= x }.
  const Bitset& up(std::size_t x) const { return up_[x]; }
  const Bitset& down(std::size_t x) const { return down_[x]; }
  /// Closed interval [x, y] (empty unless x <= y).
  Bitset interval(std::size_t x, std::size_t y) const { return up_[x] & down_[y]; }

  /// Hasse diagram, sorted by (lower, upper).
  const std::vector<CoverEdge>& covers() const noexcept { return covers_; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_[x]; }
  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_[x]; }
  bool covered_by(std::size_t x, std::size_t y) const;

  std::optional<std::size_t> join(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> meet(std::size_t x, std::size_t y) const;
  std::optional<std::size_t> bottom() const;
  std::optional<std::size_t> top() const;

  /// Elements sorted so that x < y implies x comes first.
  std::vector<std::size_t> linear_extension() const;

  FinitePoset dual() const;

  /// Same relation on the same index set.
  bool operator==(const FinitePoset& o) const { return up_ == o.up_; }

 private:
  void finish();

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<CoverEdge> covers_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
};

}  // namespace facelat
