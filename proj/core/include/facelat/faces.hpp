#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facelat/arrangement.hpp"
#include "facelat/covectors.hpp"
#include "facelat/poset.hpp"

namespace facelat {

/// Region numbers (positions in ArrangementFaces::regions()) of the least
/// and greatest region containing a face.
struct FacialInterval {
  std::size_t min_region = 0;
  std::size_t max_region = 0;
  bool operator==(const FacialInterval&) const = default;
};

/// An arrangement together with its enumerated faces, its regions and the
/// facial interval of every face. Immutable once built.
///
/// Regions are numbered by a depth-first walk of the region graph from the
/// base region, crossing walls in hyperplane order. In rank 2 this walks
/// around the circle: B = R0, R1, ..., with -B = R(|A|).
class ArrangementFaces {
 public:
  explicit ArrangementFaces(Arrangement arr);
  ArrangementFaces(Arrangement arr, CovectorSet covectors);

  const Arrangement& arrangement() const noexcept { return arr_; }
  const CovectorSet& covectors() const noexcept { return covectors_; }

  std::size_t size() const noexcept { return covectors_.size(); }
  const SignVector& face(std::size_t i) const { return covectors_[i]; }
  std::size_t dim(std::size_t i) const { return covectors_.dim(i); }
  /// Ambient dimension minus face dimension.
  std::size_t codim(std::size_t i) const { return arr_.dim() - covectors_.dim(i); }
  std::optional<std::size_t> index_of(const SignVector& v) const { return covectors_.index_of(v); }
  /// Face index, throwing InternalInconsistency when v is not a face.
  std::size_t require(const SignVector& v) const;

  std::size_t region_count() const noexcept { return regions_.size(); }
  /// Face index of region number r.
  std::size_t region_face(std::size_t r) const { return regions_[r]; }
  const std::vector<std::size_t>& regions() const noexcept { return regions_; }
  /// Region number of a face, if the face is a region.
  std::optional<std::size_t> region_number(std::size_t face) const;

  std::size_t base_face() const { return regions_.front(); }
  std::size_t origin_face() const;
  /// Face index of -F.
  std::size_t opposite_face(std::size_t face) const { return opposites_[face]; }

  const FacialInterval& interval(std::size_t face) const { return intervals_[face]; }
  /// { H : R(H) = - } for region number r.
  const HyperplaneSet& separation_set(std::size_t r) const { return separation_[r]; }

  /// "B" for the base region, "R<i>" otherwise.
  std::string region_label(std::size_t r) const;
  /// "[m,M]" with region labels.
  std::string interval_label(std::size_t face) const;

 private:
  void build();

  Arrangement arr_;
  CovectorSet covectors_;
  std::vector<std::size_t> regions_;
  std::vector<std::size_t> region_of_face_;  // npos when not a region
  std::vector<std::size_t> opposites_;
  std::vector<HyperplaneSet> separation_;
  std::vector<FacialInterval> intervals_;
};

/// Regions ordered by inclusion of separation sets S(B, R).
FinitePoset poset_of_regions(const ArrangementFaces& faces);

/// The facial interval [m_F, M_F] of a face. Throws InternalInconsistency if
/// either end is missing from the region list.
FacialInterval facial_interval(const ArrangementFaces& faces, std::size_t face);

}  // namespace facelat
