#pragma once

#include <cstddef>
#include <vector>

#include "facelat/faces.hpp"
#include "facelat/poset.hpp"

namespace facelat {

/// F <= G iff m_F <= m_G and M_F <= M_G in the poset of regions.
FinitePoset fwo_by_intervals(const ArrangementFaces& faces);
FinitePoset fwo_by_intervals(const ArrangementFaces& faces, const FinitePoset& regions);

/// F <= G iff G(H) <= F(H) for every H, with - < 0 < +.
FinitePoset fwo_by_covectors(const ArrangementFaces& faces);

/// Edges F -> G between faces of adjacent dimension with either F a face of
/// G and M_F = M_G, or G a face of F and m_F = m_G. Sorted by (lower, upper).
std::vector<CoverEdge> fwo_cover_edges(const ArrangementFaces& faces);

/// Reflexive-transitive closure of fwo_cover_edges.
FinitePoset fwo_by_covers(const ArrangementFaces& faces);

/// Roots of the face: e_H is in positive for F(H) <= 0, -e_H is in negative
/// for F(H) >= 0.
struct RootInversionSet {
  HyperplaneSet positive;
  HyperplaneSet negative;
  bool operator==(const RootInversionSet&) const = default;
};

RootInversionSet root_inversion_set(const SignVector& f);

/// R(F)+ within R(G)+ and R(F)- containing R(G)-.
bool roots_leq(const RootInversionSet& f, const RootInversionSet& g);
/// R(F) \ R(G) only negative roots and R(G) \ R(F) only positive roots.
bool roots_leq_by_difference(const RootInversionSet& f, const RootInversionSet& g);

FinitePoset fwo_by_roots(const ArrangementFaces& faces);

/// The largest face contained in both X and Y (the intersection of their
/// closures). Always exists in a central arrangement.
std::size_t largest_common_face(const ArrangementFaces& faces, std::size_t x, std::size_t y);

}  // namespace facelat
