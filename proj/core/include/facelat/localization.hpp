#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "facelat/faces.hpp"

namespace facelat {

/// pi_X: faces of A -> faces of A_X, where A_X = { H : X lies in H }.
struct LocalizationMap {
  std::size_t face = 0;
  std::vector<std::size_t> sub_hyperplanes;  // increasing parent indices
  std::vector<SignVector> projection;        // indexed by parent face
};

struct Localization {
  Arrangement arrangement;  // A_X, same ambient space and base point
  LocalizationMap map;
};

/// Keeps only the coordinates in `sub`.
SignVector project(const SignVector& f, const std::vector<std::size_t>& sub);

Localization localize(const ArrangementFaces& faces, std::size_t x);

/// The face G of A with X inside G and pi_X(G) = local, i.e. X o local
/// written back in the parent's coordinates.
SignVector lift(const LocalizationMap& map, const SignVector& x, const SignVector& local);

/// A^X = { H cap span(X) : H not in A_X }, written in a basis of span(X).
/// Hyperplanes with the same trace are merged; `members[k]` lists the
/// parent hyperplanes of restricted hyperplane k with their sign relative
/// to the restricted normal.
struct Restriction {
  Arrangement arrangement;
  std::size_t face = 0;
  ExactMatrix basis;
  HyperplaneSet zero_set;
  std::vector<std::vector<std::pair<std::size_t, int>>> members;
};

/// The base region of A^X is the one containing the relative interior of X,
/// so X itself becomes the all-plus region.
Restriction restrict_to(const ArrangementFaces& faces, std::size_t x);

/// iota^X: a covector of A^X back in the parent's coordinates, zero on A_X.
SignVector embed(const Restriction& r, const SignVector& y);

}  // namespace facelat
