#pragma once

#include <cstddef>
#include <string_view>

#include "facelat/faces.hpp"
#include "facelat/poset.hpp"

namespace facelat {

enum class CoverJoinCase {
  Equal,         // X = Y
  Intersection,  // X and Y both faces of Z: join is X cap Y
  TwoFace,       // Z a face of both: join is the 2-face of -B_Z spanned by them
  Reoriented,    // X inside Z inside Y (or swapped): join is -W
};

std::string_view to_string(CoverJoinCase c);

struct CoverJoinResult {
  std::size_t join = 0;
  CoverJoinCase kind = CoverJoinCase::Equal;
  std::size_t localized_at = 0;  // face whose localization hosts the construction
};

/// Join of two upper covers X, Y of Z in the facial weak order `fw`, built
/// inside the localization at the largest face common to X, Y and Z and
/// lifted back. Throws NotCoversOfZ when Z is not covered by both, and
/// NotALattice when the poset of regions of that localization is not a
/// lattice.
CoverJoinResult cover_join(const ArrangementFaces& faces, const FinitePoset& fw, std::size_t z, std::size_t x,
                           std::size_t y);

}  // namespace facelat
