#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facelat/poset.hpp"

namespace facelat {

struct LatticeCheck {
  bool is_lattice = false;
  /// A pair lacking a join (or a meet, see missing_join) when not a lattice.
  std::optional<CoverEdge> witness;
  bool missing_join = true;
};

/// Brute force: every pair has a join and a meet. The empty poset is not a
/// lattice.
LatticeCheck is_lattice(const FinitePoset& p);

struct BezReport {
  bool bounded = false;
  /// Joins exist for every pair of distinct upper covers of a common element.
  bool hypothesis = false;
  /// (z, x, y) with z covered by x and y and no join of x, y.
  std::optional<std::array<std::size_t, 3>> witness;
  bool brute_force = false;
  /// The lemma's conclusion is consistent with brute force.
  bool agrees() const { return !(bounded && hypothesis) || brute_force; }
};

BezReport bez_check(const FinitePoset& p);

/// Join and meet tables of a lattice. Throws NotALattice.
class LatticeTables {
 public:
  explicit LatticeTables(const FinitePoset& p);

  std::size_t size() const noexcept { return n_; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * n_ + y]; }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * n_ + y]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Elements covering exactly one element. Throws NotALattice.
std::vector<std::size_t> join_irreducibles(const FinitePoset& p);
/// Elements covered by exactly one element. Throws NotALattice.
std::vector<std::size_t> meet_irreducibles(const FinitePoset& p);

struct SemidistributivityCheck {
  bool ok = true;
  /// (x, y, z) violating one of the two laws.
  std::optional<std::array<std::size_t, 3>> witness;
  /// Which law failed: true for the join law x v y = x v z => x v y = x v (y ^ z).
  bool join_law = true;
};

/// Exhaustive triple scan of both semidistributive laws. Throws NotALattice.
SemidistributivityCheck is_semidistributive(const FinitePoset& p);

/// x <= y iff involution(y) <= involution(x). Throws NotABijection when the
/// map is not a permutation of the elements.
bool check_self_dual(const FinitePoset& p, const std::vector<std::size_t>& involution);

struct SublatticeCheck {
  bool ok = true;
  std::optional<CoverEdge> witness;  // pair whose join or meet leaves the subset
};

/// Closure of `subset` under the lattice operations of p. Throws NotALattice.
SublatticeCheck is_sublattice(const std::vector<std::size_t>& subset, const FinitePoset& p);

}  // namespace facelat
