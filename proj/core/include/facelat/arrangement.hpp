#pragma once

#include <cstddef>
#include <vector>

#include "facelat/exact.hpp"
#include "facelat/sign_vector.hpp"

namespace facelat {

/// A central hyperplane arrangement with a distinguished base region.
///
/// Hyperplane H_i = { x : <x, normal(i)> = 0 }. Normals are oriented once at
/// construction so that <base_point, normal(i)> > 0 for every i, i.e. the
/// base region lies on the positive side of every hyperplane. Index order is
/// the input order and never changes.
class Arrangement {
 public:
  /// No hyperplanes in dimension 0.
  Arrangement() = default;

  /// Throws ZeroNormal, DuplicateHyperplane, BasePointOnHyperplane or
  /// DimensionMismatch.
  static Arrangement build(std::vector<ExactVector> normals, ExactVector base_point);

  std::size_t dim() const noexcept { return base_point_.size(); }
  std::size_t size() const noexcept { return normals_.size(); }
  const std::vector<ExactVector>& normals() const noexcept { return normals_; }
  const ExactVector& normal(std::size_t i) const { return normals_[i]; }
  const ExactVector& base_point() const noexcept { return base_point_; }
  std::size_t rank() const noexcept { return rank_; }
  bool essential() const noexcept { return rank_ == dim(); }

  /// Indices whose normals were negated by orientation normalization.
  const std::vector<std::size_t>& flipped() const noexcept { return flipped_; }

  bool operator==(const Arrangement& o) const {
    return normals_ == o.normals_ && base_point_ == o.base_point_;
  }

 private:
  std::vector<ExactVector> normals_;
  ExactVector base_point_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> flipped_;
};

inline Arrangement build_arrangement(std::vector<ExactVector> normals, ExactVector base_point) {
  return Arrangement::build(std::move(normals), std::move(base_point));
}

/// Quotient by the orthogonal complement of the span of the normals: the
/// result lives in dimension rank(arr), with the same hyperplane order and
/// the same covector set.
Arrangement essentialize(const Arrangement& arr);

/// sign(<point, normal(H)>) for every H. Throws DimensionMismatch.
SignVector sign_map(const Arrangement& arr, const ExactVector& point);

/// Same hyperplanes, new base region (the one containing `base_point`).
/// Normals in S(B, B') are reoriented.
Arrangement rebase(const Arrangement& arr, const ExactVector& base_point);

}  // namespace facelat
