#include "facelat/faces.hpp"

#include <unordered_map>

#include "facelat/error.hpp"

namespace facelat {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

}  // namespace

ArrangementFaces::ArrangementFaces(Arrangement arr) : arr_(std::move(arr)) {
  covectors_ = enumerate_covectors(arr_);
  build();
}

ArrangementFaces::ArrangementFaces(Arrangement arr, CovectorSet covectors)
    : arr_(std::move(arr)), covectors_(std::move(covectors)) {
  if (covectors_.length() != arr_.size() && covectors_.size() > 0) {
    throw Error(ErrorKind::DimensionMismatch, "covector length differs from hyperplane count");
  }
  build();
}

void ArrangementFaces::build() {
  const std::size_t m = arr_.size();
  const auto base = covectors_.index_of(SignVector::all(m, Sign::Plus));
  if (!base) throw Error(ErrorKind::InternalInconsistency, "base region missing from the covector set");

  // Depth-first walk over regions, crossing walls in index order.
  region_of_face_.assign(size(), npos);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{*base, 0}};
  region_of_face_[*base] = 0;
  regions_.push_back(*base);
  while (!stack.empty()) {
    auto& [face, next_h] = stack.back();
    if (next_h >= m) {
      stack.pop_back();
      continue;
    }
    const std::size_t h = next_h++;
    const SignVector& r = covectors_[face];
    SignVector facet = r;
    facet.set(h, Sign::Zero);
    if (!covectors_.contains(facet)) continue;
    SignVector across = r;
    across.set(h, negate(r[h]));
    const auto nb = covectors_.index_of(across);
    if (!nb || region_of_face_[*nb] != npos) continue;
    region_of_face_[*nb] = regions_.size();
    regions_.push_back(*nb);
    stack.emplace_back(*nb, 0);
  }
  for (std::size_t i = 0; i < size(); ++i) {
    if (covectors_[i].is_tope() && region_of_face_[i] == npos) {
      throw Error(ErrorKind::InternalInconsistency, "region " + covectors_[i].to_string() + " is not reachable from B");
    }
  }

  std::unordered_map<Bitset, std::size_t, decltype([](const Bitset& b) { return b.hash(); })> by_separation;
  separation_.clear();
  for (std::size_t r = 0; r < regions_.size(); ++r) {
    separation_.push_back(covectors_[regions_[r]].minus_set());
    by_separation.emplace(separation_.back(), r);
  }

  opposites_.assign(size(), npos);
  intervals_.assign(size(), {});
  for (std::size_t i = 0; i < size(); ++i) {
    const SignVector& f = covectors_[i];
    const auto opp = covectors_.index_of(opposite(f));
    if (!opp) throw Error(ErrorKind::InternalInconsistency, "opposite of " + f.to_string() + " is not a face");
    opposites_[i] = *opp;
    auto lo = by_separation.find(f.minus_set());
    auto hi = by_separation.find(f.plus_set().complement());
    if (lo == by_separation.end() || hi == by_separation.end()) {
      throw Error(ErrorKind::InternalInconsistency, "no facial interval for " + f.to_string());
    }
    intervals_[i] = {lo->second, hi->second};
  }
}

std::size_t ArrangementFaces::require(const SignVector& v) const {
  auto i = covectors_.index_of(v);
  if (!i) throw Error(ErrorKind::InternalInconsistency, v.to_string() + " is not a face");
  return *i;
}

std::optional<std::size_t> ArrangementFaces::region_number(std::size_t face) const {
  if (region_of_face_[face] == npos) return std::nullopt;
  return region_of_face_[face];
}

std::size_t ArrangementFaces::origin_face() const { return require(SignVector::zero(arr_.size())); }

std::string ArrangementFaces::region_label(std::size_t r) const {
  return r == 0 ? std::string("B") : "R" + std::to_string(r);
}

std::string ArrangementFaces::interval_label(std::size_t face) const {
  const auto& iv = intervals_[face];
  return "[" + region_label(iv.min_region) + "," + region_label(iv.max_region) + "]";
}

FinitePoset poset_of_regions(const ArrangementFaces& faces) {
  return FinitePoset::from_leq(faces.region_count(), [&](std::size_t a, std::size_t b) {
    return faces.separation_set(a).is_subset_of(faces.separation_set(b));
  });
}

FacialInterval facial_interval(const ArrangementFaces& faces, std::size_t face) {
  if (face >= faces.size()) throw Error(ErrorKind::InternalInconsistency, "face index out of range");
  return faces.interval(face);
}

}  // namespace facelat
