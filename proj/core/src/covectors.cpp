#include "facelat/covectors.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "facelat/error.hpp"
#include "facelat/linalg.hpp"
#include "facelat/lp.hpp"

namespace facelat {

namespace {

std::vector<ExactVector> normals_of(const Arrangement& arr, const HyperplaneSet& set) {
  std::vector<ExactVector> rows;
  set.for_each([&](std::size_t h) { rows.push_back(arr.normal(h)); });
  return rows;
}

std::string echelon_key(const Echelon& e) {
  std::string key;
  for (const auto& row : e.rows) {
    key += to_string(row);
    key += ';';
  }
  return key;
}

// Coefficients of the functional x -> <x, e> restricted to span(basis).
ExactVector trace(const ExactVector& normal, const std::vector<ExactVector>& basis) {
  ExactVector t(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) t[k] = dot(normal, basis[k]);
  return t;
}

}  // namespace

std::vector<Flat> enumerate_flats(const Arrangement& arr) {
  const std::size_t n = arr.dim();
  std::vector<Flat> flats;
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> work;

  auto add_flat = [&](const Echelon& e) {
    if (!seen.insert(echelon_key(e)).second) return;
    Flat f;
    f.zero_set = HyperplaneSet(arr.size());
    for (std::size_t h = 0; h < arr.size(); ++h) {
      if (e.contains(arr.normal(h))) f.zero_set.set(h);
    }
    f.basis = nullspace(e.rows, n);
    f.dim = f.basis.size();
    flats.push_back(std::move(f));
    work.push_back(flats.size() - 1);
  };

  add_flat(row_reduce({}, n));
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    const HyperplaneSet zero = flats[i].zero_set;
    for (std::size_t h = 0; h < arr.size(); ++h) {
      if (zero.test(h)) continue;
      auto rows = normals_of(arr, zero);
      rows.push_back(arr.normal(h));
      add_flat(row_reduce(std::move(rows), n));
    }
  }

  std::stable_sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.zero_set.indices() < b.zero_set.indices();
  });
  return flats;
}

std::optional<ExactVector> relative_interior_point(const Arrangement& arr, const SignVector& pattern) {
  if (pattern.size() != arr.size()) {
    throw Error(ErrorKind::DimensionMismatch, "pattern length " + std::to_string(pattern.size()) +
                                                  " for " + std::to_string(arr.size()) + " hyperplanes");
  }
  const std::size_t n = arr.dim();
  const auto basis = nullspace(normals_of(arr, pattern.zero_set()), n);
  if (pattern.is_zero()) return ExactVector(n, 0);
  if (basis.empty()) return std::nullopt;

  ExactMatrix rows;
  pattern.support().for_each([&](std::size_t h) {
    ExactVector t = trace(arr.normal(h), basis);
    if (pattern[h] == Sign::Minus) t = negated(t);
    rows.push_back(std::move(t));
  });
  const auto y = find_strictly_positive_point(rows, basis.size());
  if (!y) return std::nullopt;
  ExactVector x(n, 0);
  for (std::size_t k = 0; k < basis.size(); ++k) x = add(x, scaled(basis[k], (*y)[k]));
  return x;
}

bool strictly_feasible(const Arrangement& arr, const SignVector& pattern) {
  return relative_interior_point(arr, pattern).has_value();
}

CovectorSet::CovectorSet(std::vector<SignVector> covectors, std::vector<std::size_t> dims) {
  length_ = covectors.empty() ? 0 : covectors.front().size();
  for (const auto& c : covectors) {
    if (c.size() != length_) throw Error(ErrorKind::DimensionMismatch, "covectors of unequal length");
  }
  if (!dims.empty() && dims.size() != covectors.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one dimension per covector required");
  }
  std::vector<std::size_t> order(covectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return covectors[a] < covectors[b]; });
  for (std::size_t i : order) {
    if (!covectors_.empty() && covectors_.back() == covectors[i]) continue;
    lookup_.emplace(covectors[i], covectors_.size());
    if (!dims.empty()) {
      by_dim_[dims[i]].push_back(covectors_.size());
      dims_.push_back(dims[i]);
    }
    covectors_.push_back(covectors[i]);
  }
}

std::optional<std::size_t> CovectorSet::index_of(const SignVector& v) const {
  auto it = lookup_.find(v);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CovectorSet::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& [d, idx] : by_dim_) {
    if (f.size() <= d) f.resize(d + 1, 0);
    f[d] = idx.size();
  }
  return f;
}

CovectorSet CovectorSet::without(const SignVector& v) const {
  std::vector<SignVector> kept;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < size(); ++i) {
    if (covectors_[i] == v) continue;
    kept.push_back(covectors_[i]);
    if (has_dims()) dims.push_back(dims_[i]);
  }
  return CovectorSet(std::move(kept), std::move(dims));
}

CovectorSet enumerate_covectors(const Arrangement& arr) {
  std::vector<SignVector> all;
  std::vector<std::size_t> dims;

  for (const Flat& flat : enumerate_flats(arr)) {
    const std::size_t d = flat.dim;

    // Group hyperplanes whose traces on the flat coincide; crossing such a
    // trace flips the whole group at once.
    struct Group {
      ExactVector rep;
      std::vector<std::pair<std::size_t, int>> members;  // (hyperplane, sign relative to rep)
    };
    std::vector<Group> groups;
    for (std::size_t h = 0; h < arr.size(); ++h) {
      if (flat.zero_set.test(h)) continue;
      ExactVector t = trace(arr.normal(h), flat.basis);
      bool placed = false;
      for (auto& g : groups) {
        if (!parallel(g.rep, t)) continue;
        std::size_t k = 0;
        while (g.rep[k] == 0) ++k;
        g.members.emplace_back(h, sign(t[k]) == sign(g.rep[k]) ? 1 : -1);
        placed = true;
        break;
      }
      if (!placed) groups.push_back(Group{t, {{h, 1}}});
    }

    // Generic seed y = (1, s, s^2, ...) avoiding every trace.
    ExactVector seed(d);
    for (long s = 1;; ++s) {
      ExactScalar p = 1;
      for (std::size_t k = 0; k < d; ++k) {
        seed[k] = p;
        p *= s;
      }
      bool generic = true;
      for (const auto& g : groups) {
        if (dot(g.rep, seed) == 0) {
          generic = false;
          break;
        }
      }
      if (generic) break;
    }

    SignVector start(arr.size());
    for (const auto& g : groups) {
      const int s = sign(dot(g.rep, seed));
      for (auto [h, rel] : g.members) start.set(h, static_cast<Sign>(s * rel));
    }

    std::unordered_set<SignVector, SignVectorHash> seen{start};
    std::deque<SignVector> queue{start};
    while (!queue.empty()) {
      SignVector cur = std::move(queue.front());
      queue.pop_front();
      for (const auto& g : groups) {
        SignVector next = cur;
        for (auto [h, rel] : g.members) next.set(h, negate(cur[h]));
        if (seen.count(next)) continue;
        if (!strictly_feasible(arr, next)) continue;
        seen.insert(next);
        queue.push_back(next);
      }
      all.push_back(std::move(cur));
      dims.push_back(d);
    }
  }
  return CovectorSet(std::move(all), std::move(dims));
}

HyperplaneSet walls(const CovectorSet& covectors, const SignVector& region) {
  HyperplaneSet w(region.size());
  for (std::size_t h = 0; h < region.size(); ++h) {
    if (region[h] == Sign::Zero) continue;
    SignVector facet = region;
    facet.set(h, Sign::Zero);
    if (covectors.contains(facet)) w.set(h);
  }
  return w;
}

bool is_simplicial(const Arrangement& arr, const CovectorSet& covectors) {
  for (const auto& c : covectors) {
    if (!c.is_tope()) continue;
    const HyperplaneSet w = walls(covectors, c);
    if (w.count() != arr.rank()) return false;
    std::vector<ExactVector> rows;
    w.for_each([&](std::size_t h) { rows.push_back(arr.normal(h)); });
    if (rank(rows, arr.dim()) != arr.rank()) return false;
  }
  return true;
}

}  // namespace facelat
