#include "facelat/arrangement.hpp"

#include <string>

#include "facelat/error.hpp"
#include "facelat/linalg.hpp"

namespace facelat {

Arrangement Arrangement::build(std::vector<ExactVector> normals, ExactVector base_point) {
  const std::size_t n = base_point.size();
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != n) {
      throw Error(ErrorKind::DimensionMismatch, "hyperplane " + std::to_string(i) + " has " +
                                                    std::to_string(normals[i].size()) + " coordinates, expected " +
                                                    std::to_string(n));
    }
    if (is_zero(normals[i])) throw Error(ErrorKind::ZeroNormal, "hyperplane " + std::to_string(i));
  }
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = i + 1; j < normals.size(); ++j) {
      if (parallel(normals[i], normals[j])) {
        throw Error(ErrorKind::DuplicateHyperplane,
                    "hyperplanes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }

  Arrangement arr;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const int s = sign(dot(base_point, normals[i]));
    if (s == 0) {
      throw Error(ErrorKind::BasePointOnHyperplane, "base point lies on hyperplane " + std::to_string(i));
    }
    if (s < 0) {
      for (auto& x : normals[i]) x = -x;
      arr.flipped_.push_back(i);
    }
  }
  arr.rank_ = facelat::rank(normals, n);
  arr.normals_ = std::move(normals);
  arr.base_point_ = std::move(base_point);
  return arr;
}

Arrangement essentialize(const Arrangement& arr) {
  const Echelon basis = row_reduce(arr.normals(), arr.dim());
  std::vector<ExactVector> normals;
  normals.reserve(arr.size());
  for (const auto& e : arr.normals()) normals.push_back(basis.coordinates(e));
  // y = (<x, b_1>, ..., <x, b_r>) so that <x, e> = <y, coords(e)>.
  ExactVector base(basis.rank());
  for (std::size_t k = 0; k < basis.rank(); ++k) base[k] = dot(arr.base_point(), basis.rows[k]);
  return Arrangement::build(std::move(normals), std::move(base));
}

SignVector sign_map(const Arrangement& arr, const ExactVector& point) {
  if (point.size() != arr.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "point has " + std::to_string(point.size()) + " coordinates, expected " + std::to_string(arr.dim()));
  }
  SignVector v(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) v.set(i, static_cast<Sign>(sign(dot(point, arr.normal(i)))));
  return v;
}

Arrangement rebase(const Arrangement& arr, const ExactVector& base_point) {
  return Arrangement::build(arr.normals(), base_point);
}

}  // namespace facelat
