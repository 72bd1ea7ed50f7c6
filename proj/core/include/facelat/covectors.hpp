#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "facelat/arrangement.hpp"
#include "facelat/bitset.hpp"
#include "facelat/sign_vector.hpp"

namespace facelat {

/// An intersection subspace of the arrangement.
struct Flat {
  HyperplaneSet zero_set;           // every hyperplane containing the subspace
  std::vector<ExactVector> basis;   // spans the subspace
  std::size_t dim = 0;
};

/// All intersections of subsets of hyperplanes, ambient space first, then
/// by decreasing dimension. Deduplicated on the row-reduced echelon form of
/// the normals cutting them out.
std::vector<Flat> enumerate_flats(const Arrangement& arr);

/// Is there x with sign(<x, e_H>) = pattern(H) for every H?
bool strictly_feasible(const Arrangement& arr, const SignVector& pattern);

/// A witness point for strictly_feasible, if any.
std::optional<ExactVector> relative_interior_point(const Arrangement& arr, const SignVector& pattern);

/// The face sign vectors of an arrangement (or any family of sign vectors,
/// for the axiom checker). Indexed in lexicographic order, - < 0 < +.
class CovectorSet {
 public:
  CovectorSet() = default;
  /// `dims` may be empty when face dimensions are unknown.
  CovectorSet(std::vector<SignVector> covectors, std::vector<std::size_t> dims = {});

  std::size_t size() const noexcept { return covectors_.size(); }
  std::size_t length() const noexcept { return length_; }
  const SignVector& operator[](std::size_t i) const { return covectors_[i]; }
  const std::vector<SignVector>& covectors() const noexcept { return covectors_; }
  auto begin() const { return covectors_.begin(); }
  auto end() const { return covectors_.end(); }

  std::optional<std::size_t> index_of(const SignVector& v) const;
  bool contains(const SignVector& v) const { return lookup_.count(v) != 0; }

  bool has_dims() const noexcept { return !dims_.empty(); }
  std::size_t dim(std::size_t i) const { return dims_.at(i); }
  const std::map<std::size_t, std::vector<std::size_t>>& by_dim() const noexcept { return by_dim_; }

  /// Face-dimension counts f_0, f_1, ... (index = dimension).
  std::vector<std::size_t> f_vector() const;

  /// Copy without the given covector (used to build mutated sets).
  CovectorSet without(const SignVector& v) const;

 private:
  std::vector<SignVector> covectors_;
  std::vector<std::size_t> dims_;
  std::unordered_map<SignVector, std::size_t, SignVectorHash> lookup_;
  std::map<std::size_t, std::vector<std::size_t>> by_dim_;
  std::size_t length_ = 0;
};

/// Every face of the arrangement, enumerated flat by flat: the faces whose
/// zero set is a flat's zero set are the regions of the arrangement induced
/// on that flat, reached by wall-crossing from a generic seed point.
CovectorSet enumerate_covectors(const Arrangement& arr);

/// Regions of `arr` that have exactly `arr.rank()` walls with independent
/// normals, for every region: the arrangement is simplicial.
bool is_simplicial(const Arrangement& arr, const CovectorSet& covectors);

/// Hyperplanes bounding the given region (those whose sign can be zeroed to
/// reach a facet).
HyperplaneSet walls(const CovectorSet& covectors, const SignVector& region);

}  // namespace facelat
