#include "facelat/poset.hpp"

#include <algorithm>
#include <string>

#include "facelat/error.hpp"
#include "facelat/parallel.hpp"

namespace facelat {

namespace {

std::string pair_text(std::size_t a, std::size_t b) {
  return std::to_string(a) + " and " + std::to_string(b);
}

}  // namespace

FinitePoset FinitePoset::from_leq(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  FinitePoset p;
  p.up_.assign(n, Bitset(n));
  parallel_for(n, [&](std::size_t x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || leq(x, y)) p.up_[x].set(y);
    }
  });
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (p.up_[x].test(y) && p.up_[y].test(x)) {
        throw Error(ErrorKind::NotAntisymmetric, "elements " + pair_text(x, y) + " are mutually below each other");
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = p.up_[x].find_first(); y != Bitset::npos; y = p.up_[x].find_next(y + 1)) {
      if (p.up_[y].is_subset_of(p.up_[x])) continue;
      const std::size_t z = (p.up_[y] - p.up_[x]).find_first();
      throw Error(ErrorKind::NotTransitive, std::to_string(x) + " <= " + std::to_string(y) + " <= " +
                                                std::to_string(z) + " but not " + std::to_string(x) +
                                                " <= " + std::to_string(z));
    }
  }
  p.finish();
  return p;
}

FinitePoset FinitePoset::from_covers(std::size_t n, const std::vector<CoverEdge>& edges) {
  std::vector<std::vector<std::size_t>> succ(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw Error(ErrorKind::DimensionMismatch, "edge endpoint out of range");
    succ[a].push_back(b);
  }
  FinitePoset p;
  p.up_.assign(n, Bitset(n));
  parallel_for(n, [&](std::size_t x) {
    std::vector<std::size_t> stack{x};
    p.up_[x].set(x);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : succ[v]) {
        if (p.up_[x].test(w)) continue;
        p.up_[x].set(w);
        stack.push_back(w);
      }
    }
  });
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (p.up_[x].test(y) && p.up_[y].test(x)) {
        throw Error(ErrorKind::NotAntisymmetric, "edges form a cycle through " + pair_text(x, y));
      }
    }
  }
  p.finish();
  return p;
}

void FinitePoset::finish() {
  const std::size_t n = up_.size();
  down_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) up_[x].for_each([&](std::size_t y) { down_[y].set(x); });

  lower_.assign(n, {});
  upper_.assign(n, {});
  std::vector<std::vector<std::size_t>> ups(n);
  parallel_for(n, [&](std::size_t x) {
    Bitset strict_up = up_[x];
    strict_up.reset(x);
    strict_up.for_each([&](std::size_t y) {
      Bitset between = strict_up & down_[y];
      between.reset(y);
      if (between.none()) ups[x].push_back(y);
    });
  });
  covers_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y : ups[x]) {
      covers_.emplace_back(x, y);
      upper_[x].push_back(y);
      lower_[y].push_back(x);
    }
  }
}

bool FinitePoset::covered_by(std::size_t x, std::size_t y) const {
  return std::binary_search(upper_[x].begin(), upper_[x].end(), y);
}

std::optional<std::size_t> FinitePoset::join(std::size_t x, std::size_t y) const {
  const Bitset bounds = up_[x] & up_[y];
  for (std::size_t z = bounds.find_first(); z != Bitset::npos; z = bounds.find_next(z + 1)) {
    if (up_[z] == bounds) return z;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::meet(std::size_t x, std::size_t y) const {
  const Bitset bounds = down_[x] & down_[y];
  for (std::size_t z = bounds.find_first(); z != Bitset::npos; z = bounds.find_next(z + 1)) {
    if (down_[z] == bounds) return z;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::bottom() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (up_[x].count() == size()) return x;
  }
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::top() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (down_[x].count() == size()) return x;
  }
  return std::nullopt;
}

std::vector<std::size_t> FinitePoset::linear_extension() const {
  std::vector<std::size_t> order(size());
  std::vector<std::size_t> rank(size());
  for (std::size_t x = 0; x < size(); ++x) {
    order[x] = x;
    rank[x] = down_[x].count();
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
  return order;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset d;
  d.up_ = down_;
  d.finish();
  return d;
}

}  // namespace facelat
