#include "facelat/generators.hpp"

#include <algorithm>
#include <random>

#include "facelat/covectors.hpp"
#include "facelat/error.hpp"
#include "facelat/linalg.hpp"

namespace facelat {

namespace {

ExactVector unit(std::size_t n, std::size_t i) {
  ExactVector v(n, 0);
  v[i] = 1;
  return v;
}

ExactVector descending(std::size_t n, long top) {
  ExactVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = top - static_cast<long>(i);
  return v;
}

void require_rank(std::string_view family, std::size_t rank, std::size_t min) {
  if (rank < min) {
    throw Error(ErrorKind::UnsupportedFamily,
                std::string(family) + " needs rank at least " + std::to_string(min) + ", got " + std::to_string(rank));
  }
}

Arrangement type_a(std::size_t n) {
  require_rank("A", n, 1);
  std::vector<ExactVector> normals;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) normals.push_back(subtract(unit(n + 1, i), unit(n + 1, j)));
  }
  return essentialize(Arrangement::build(std::move(normals), descending(n + 1, static_cast<long>(n) + 1)));
}

Arrangement type_bd(std::size_t n, bool with_units) {
  std::vector<ExactVector> normals;
  if (with_units) {
    for (std::size_t i = 0; i < n; ++i) normals.push_back(unit(n, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      normals.push_back(subtract(unit(n, i), unit(n, j)));
      normals.push_back(add(unit(n, i), unit(n, j)));
    }
  }
  return essentialize(Arrangement::build(std::move(normals), descending(n, static_cast<long>(n))));
}

Arrangement type_g2() {
  std::vector<ExactVector> normals = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}, {2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  return essentialize(Arrangement::build(std::move(normals), ExactVector{5, 2, 0}));
}

Arrangement demo(std::optional<std::size_t> base_region) {
  std::vector<ExactVector> normals = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
  const Arrangement oriented = Arrangement::build(normals, ExactVector{1, 1, 1});
  const CovectorSet covectors = enumerate_covectors(oriented);
  std::vector<SignVector> regions;
  for (const auto& c : covectors) {
    if (c.is_tope()) regions.push_back(c);
  }
  std::size_t pick = regions.size();
  if (base_region) {
    if (*base_region >= regions.size()) {
      throw Error(ErrorKind::DimensionMismatch, "base region " + std::to_string(*base_region) + " out of range (" +
                                                    std::to_string(regions.size()) + " regions)");
    }
    pick = *base_region;
  } else {
    for (std::size_t r = 0; r < regions.size(); ++r) {
      if (walls(covectors, regions[r]).count() == 4) {
        pick = r;
        break;
      }
    }
  }
  return rebase(oriented, *relative_interior_point(oriented, regions[pick]));
}

// A point on no hyperplane: first of (1, s, s^2) that works.
ExactVector generic_point(const std::vector<ExactVector>& normals) {
  for (long s = 2;; ++s) {
    ExactVector p{1, s, s * s};
    if (std::none_of(normals.begin(), normals.end(), [&](const ExactVector& e) { return dot(e, p) == 0; })) return p;
  }
}

}  // namespace

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> names = {"A", "B", "D", "G2", "demo"};
  return names;
}

Arrangement generate(std::string_view family, std::size_t rank, std::optional<std::size_t> base_region) {
  const bool is_demo = family == "demo" || family == "hexagonal-nonsimplicial-demo";
  if (base_region && !is_demo) {
    throw Error(ErrorKind::UnsupportedFamily, "--base-region applies to the demo family only");
  }
  if (family == "A") return type_a(rank);
  if (family == "B") {
    require_rank("B", rank, 1);
    return type_bd(rank, true);
  }
  if (family == "D") {
    require_rank("D", rank, 2);
    return type_bd(rank, false);
  }
  if (family == "G2") {
    if (rank != 2) throw Error(ErrorKind::UnsupportedFamily, "G2 exists in rank 2 only");
    return type_g2();
  }
  if (is_demo) {
    if (rank != 3) throw Error(ErrorKind::UnsupportedFamily, "the demo arrangement has rank 3");
    return demo(base_region);
  }
  if (family == "H3" || family == "H4" || family == "H2") {
    throw Error(ErrorKind::UnsupportedFamily, std::string(family) + ": irrational coordinates unsupported");
  }
  throw Error(ErrorKind::UnsupportedFamily, "unknown family " + std::string(family));
}

Arrangement random_simplicial_rank3(std::uint64_t seed, std::size_t max_hyperplanes) {
  if (max_hyperplanes < 3) throw Error(ErrorKind::UnsupportedFamily, "rank 3 needs at least 3 hyperplanes");
  std::vector<ExactVector> pool;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      for (int c = -1; c <= 1; ++c) {
        // One representative per line: first nonzero entry positive.
        const int lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) pool.push_back({a, b, c});
      }
    }
  }
  std::mt19937_64 rng(seed);
  const std::size_t top = std::min(max_hyperplanes, pool.size());
  std::uniform_int_distribution<std::size_t> size_dist(3, top);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> denom(1, 3);

  while (true) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::size_t m = size_dist(rng);
    std::vector<ExactVector> normals(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(m));
    if (rank(normals, 3) != 3) continue;
    const Arrangement probe = Arrangement::build(normals, generic_point(normals));
    const CovectorSet covectors = enumerate_covectors(probe);
    if (!is_simplicial(probe, covectors)) continue;

    ExactMatrix t(3, ExactVector(3));
    do {
      for (auto& row : t) {
        for (auto& x : row) x = ExactScalar(entry(rng), denom(rng));
      }
    } while (rank(t, 3) != 3);
    std::vector<ExactVector> mapped;
    for (const auto& v : normals) {
      ExactVector w(3, 0);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) w[i] += t[i][j] * v[j];
      }
      for (auto& x : w) x.canonicalize();
      mapped.push_back(std::move(w));
    }
    const Arrangement generic = Arrangement::build(mapped, generic_point(mapped));
    std::vector<SignVector> regions;
    for (const auto& c : enumerate_covectors(generic)) {
      if (c.is_tope()) regions.push_back(c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, regions.size() - 1);
    return rebase(generic, *relative_interior_point(generic, regions[pick(rng)]));
  }
}

}  // namespace facelat
