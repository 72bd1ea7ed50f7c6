#include "facelat/facial_weak_order.hpp"

#include <algorithm>

#include "facelat/error.hpp"

namespace facelat {

FinitePoset fwo_by_intervals(const ArrangementFaces& faces) {
  return fwo_by_intervals(faces, poset_of_regions(faces));
}

FinitePoset fwo_by_intervals(const ArrangementFaces& faces, const FinitePoset& regions) {
  return FinitePoset::from_leq(faces.size(), [&](std::size_t f, std::size_t g) {
    const auto& a = faces.interval(f);
    const auto& b = faces.interval(g);
    return regions.leq(a.min_region, b.min_region) && regions.leq(a.max_region, b.max_region);
  });
}

FinitePoset fwo_by_covectors(const ArrangementFaces& faces) {
  return FinitePoset::from_leq(faces.size(), [&](std::size_t f, std::size_t g) {
    return componentwise_geq(faces.face(f), faces.face(g));
  });
}

std::vector<CoverEdge> fwo_cover_edges(const ArrangementFaces& faces) {
  std::vector<CoverEdge> edges;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t g = 0; g < faces.size(); ++g) {
      const std::size_t df = faces.dim(f);
      const std::size_t dg = faces.dim(g);
      if (df + 1 != dg && dg + 1 != df) continue;
      const auto& a = faces.interval(f);
      const auto& b = faces.interval(g);
      const bool up = is_face_of(faces.face(f), faces.face(g)) && a.max_region == b.max_region;
      const bool down = is_face_of(faces.face(g), faces.face(f)) && a.min_region == b.min_region;
      if (up || down) edges.emplace_back(f, g);
    }
  }
  return edges;
}

FinitePoset fwo_by_covers(const ArrangementFaces& faces) {
  return FinitePoset::from_covers(faces.size(), fwo_cover_edges(faces));
}

RootInversionSet root_inversion_set(const SignVector& f) {
  return {f.plus_set().complement(), f.minus_set().complement()};
}

bool roots_leq(const RootInversionSet& f, const RootInversionSet& g) {
  return f.positive.is_subset_of(g.positive) && g.negative.is_subset_of(f.negative);
}

bool roots_leq_by_difference(const RootInversionSet& f, const RootInversionSet& g) {
  // Signed roots as one set: index H is e_H, index m + H is -e_H.
  const std::size_t m = f.positive.size();
  auto as_roots = [m](const RootInversionSet& r) {
    Bitset all(2 * m);
    r.positive.for_each([&](std::size_t h) { all.set(h); });
    r.negative.for_each([&](std::size_t h) { all.set(m + h); });
    return all;
  };
  Bitset positive_roots(2 * m);
  for (std::size_t h = 0; h < m; ++h) positive_roots.set(h);
  const Bitset negative_roots = positive_roots.complement();
  const Bitset rf = as_roots(f);
  const Bitset rg = as_roots(g);
  return (rf - rg).is_subset_of(negative_roots) && (rg - rf).is_subset_of(positive_roots);
}

FinitePoset fwo_by_roots(const ArrangementFaces& faces) {
  std::vector<RootInversionSet> roots;
  roots.reserve(faces.size());
  for (const auto& c : faces.covectors()) roots.push_back(root_inversion_set(c));
  return FinitePoset::from_leq(faces.size(), [&](std::size_t f, std::size_t g) { return roots_leq(roots[f], roots[g]); });
}

std::size_t largest_common_face(const ArrangementFaces& faces, std::size_t x, std::size_t y) {
  std::size_t best = faces.size();
  for (std::size_t z = 0; z < faces.size(); ++z) {
    if (!is_face_of(faces.face(z), faces.face(x)) || !is_face_of(faces.face(z), faces.face(y))) continue;
    if (best == faces.size() || faces.dim(z) > faces.dim(best)) best = z;
  }
  if (best == faces.size()) throw Error(ErrorKind::InternalInconsistency, "faces share no common face");
  return best;
}

}  // namespace facelat
