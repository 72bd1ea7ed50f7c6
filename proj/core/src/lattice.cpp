#include "facelat/lattice.hpp"

#include <algorithm>

#include "facelat/error.hpp"
#include "facelat/parallel.hpp"

namespace facelat {

LatticeCheck is_lattice(const FinitePoset& p) {
  LatticeCheck out;
  if (p.size() == 0) return out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = x + 1; y < p.size(); ++y) {
      if (!p.join(x, y)) {
        out.witness = CoverEdge{x, y};
        out.missing_join = true;
        return out;
      }
      if (!p.meet(x, y)) {
        out.witness = CoverEdge{x, y};
        out.missing_join = false;
        return out;
      }
    }
  }
  out.is_lattice = true;
  return out;
}

BezReport bez_check(const FinitePoset& p) {
  BezReport r;
  r.bounded = p.size() > 0 && p.bottom() && p.top();
  r.hypothesis = true;
  for (std::size_t z = 0; z < p.size() && r.hypothesis; ++z) {
    const auto& ups = p.upper_covers(z);
    for (std::size_t i = 0; i < ups.size() && r.hypothesis; ++i) {
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        if (!p.join(ups[i], ups[j])) {
          r.hypothesis = false;
          r.witness = std::array<std::size_t, 3>{z, ups[i], ups[j]};
          break;
        }
      }
    }
  }
  r.brute_force = is_lattice(p).is_lattice;
  return r;
}

LatticeTables::LatticeTables(const FinitePoset& p) : n_(p.size()) {
  if (n_ == 0) throw Error(ErrorKind::NotALattice, "empty poset");
  join_.assign(n_ * n_, 0);
  meet_.assign(n_ * n_, 0);
  std::vector<int> failed(n_, 0);
  parallel_for(n_, [&](std::size_t x) {
    for (std::size_t y = 0; y < n_; ++y) {
      auto j = p.join(x, y);
      auto m = p.meet(x, y);
      if (!j || !m) {
        failed[x] = 1;
        return;
      }
      join_[x * n_ + y] = *j;
      meet_[x * n_ + y] = *m;
    }
  });
  for (std::size_t x = 0; x < n_; ++x) {
    if (failed[x]) {
      const auto c = is_lattice(p);
      throw Error(ErrorKind::NotALattice, "elements " + std::to_string(c.witness->first) + " and " +
                                              std::to_string(c.witness->second) + " have no " +
                                              (c.missing_join ? "join" : "meet"));
    }
  }
  bottom_ = *p.bottom();
  top_ = *p.top();
}

std::vector<std::size_t> join_irreducibles(const FinitePoset& p) {
  LatticeTables check(p);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.lower_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> meet_irreducibles(const FinitePoset& p) {
  LatticeTables check(p);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.upper_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

SemidistributivityCheck is_semidistributive(const FinitePoset& p) {
  const LatticeTables t(p);
  const std::size_t n = p.size();
  std::vector<std::optional<SemidistributivityCheck>> found(n);
  parallel_for(n, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (t.join(x, y) == t.join(x, z) && t.join(x, y) != t.join(x, t.meet(y, z))) {
          found[x] = SemidistributivityCheck{false, std::array<std::size_t, 3>{x, y, z}, true};
          return;
        }
        if (t.meet(x, y) == t.meet(x, z) && t.meet(x, y) != t.meet(x, t.join(y, z))) {
          found[x] = SemidistributivityCheck{false, std::array<std::size_t, 3>{x, y, z}, false};
          return;
        }
      }
    }
  });
  for (auto& f : found) {
    if (f) return *f;
  }
  return {};
}

bool check_self_dual(const FinitePoset& p, const std::vector<std::size_t>& involution) {
  const std::size_t n = p.size();
  if (involution.size() != n) throw Error(ErrorKind::NotABijection, "map has the wrong number of entries");
  std::vector<char> hit(n, 0);
  for (std::size_t x : involution) {
    if (x >= n || hit[x]) throw Error(ErrorKind::NotABijection, "map is not a permutation");
    hit[x] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.leq(x, y) != p.leq(involution[y], involution[x])) return false;
    }
  }
  return true;
}

SublatticeCheck is_sublattice(const std::vector<std::size_t>& subset, const FinitePoset& p) {
  const LatticeTables t(p);
  Bitset in(p.size());
  for (std::size_t x : subset) in.set(x);
  for (std::size_t x : subset) {
    for (std::size_t y : subset) {
      if (!in.test(t.join(x, y)) || !in.test(t.meet(x, y))) return {false, CoverEdge{x, y}};
    }
  }
  return {};
}

}  // namespace facelat
