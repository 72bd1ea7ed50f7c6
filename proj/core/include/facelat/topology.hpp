#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "facelat/faces.hpp"
#include "facelat/mobius.hpp"
#include "facelat/poset.hpp"

namespace facelat {

enum class HomotopyKind { Sphere, Contractible };

struct HomotopyClass {
  HomotopyKind kind = HomotopyKind::Contractible;
  int sphere_dim = 0;  // meaningful for Sphere only; -1 is the empty complex
  bool operator==(const HomotopyClass&) const = default;
};

std::string to_string(const HomotopyClass& c);

/// Homotopy type of the open interval (X, Y) of the facial weak order `fw`,
/// with Z the largest face common to X and Y: a sphere of dimension
/// dim X + dim Y - 2 dim Z - 2 when X <= Z <= Y and Z = X_{-Z} cap Y,
/// contractible otherwise. Throws NotComparable unless X <= Y.
HomotopyClass classify_interval(const ArrangementFaces& faces, const FinitePoset& fw, std::size_t x, std::size_t y);

/// (-1)^(dim X + dim Y) on sphere intervals, 0 otherwise.
std::int64_t mobius_closed_form(const ArrangementFaces& faces, const FinitePoset& fw, std::size_t x, std::size_t y);

struct IntervalRecord {
  std::size_t x = 0;
  std::size_t y = 0;
  HomotopyClass homotopy;
  std::int64_t closed_form = 0;
  std::int64_t recursive = 0;
  bool agrees() const { return closed_form == recursive; }
};

struct MobiusReport {
  std::vector<IntervalRecord> intervals;
  std::size_t mismatches() const;
  bool ok() const { return mismatches() == 0; }
  std::string to_csv(const ArrangementFaces& faces) const;
  std::string to_json(const ArrangementFaces& faces) const;
};

/// Closed form against the recursive Möbius function over every
/// comparable pair of `fw`.
MobiusReport mobius_report(const ArrangementFaces& faces, const FinitePoset& fw);

struct EdelmanWalkerMismatch {
  std::size_t low = 0;   // region numbers
  std::size_t high = 0;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
};

struct EdelmanWalkerReport {
  std::size_t intervals_checked = 0;
  std::vector<EdelmanWalkerMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// On the poset of regions, mu(R1, R2) must be (-1)^codim X when [R1, R2]
/// is the facial interval of a face X and 0 otherwise.
EdelmanWalkerReport edelman_walker_check(const ArrangementFaces& faces);

}  // namespace facelat
