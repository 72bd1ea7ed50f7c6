#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "facelat/faces.hpp"

namespace facelat {

/// tau(F) = fixed_part + sum of lambda_H e_H over the free generators,
/// lambda_H in [-1, 1].
struct ZonotopeFace {
  ExactVector fixed_part;               // sum of F(H) e_H over H with F(H) != 0
  ExactMatrix free_generators;          // e_H for F(H) = 0
  std::size_t dim = 0;                  // rank of the free generators
};

ZonotopeFace tau(const Arrangement& arr, const SignVector& f);

/// Face counts of the zonotope by dimension, through tau.
std::vector<std::size_t> zonotope_f_vector(const ArrangementFaces& faces);

struct RationalCone {
  ExactMatrix generators;
  bool contains(const ExactVector& v) const;
  /// Both generator sets lie in the other cone.
  bool equals(const RationalCone& other) const;
};

/// cone(R(F)): e_H for F(H) <= 0 and -e_H for F(H) >= 0.
RationalCone root_cone(const Arrangement& arr, const SignVector& f);

/// Inner primal cone of tau(F): generated by v - w over zonotope vertices v
/// and vertices w of tau(F).
RationalCone primal_cone(const ArrangementFaces& faces, std::size_t face);

struct ConeCheck {
  bool cones_equal = false;
  /// Every root lies in pricone(tau(F)) exactly when it is in R(F).
  bool roots_match = false;
  bool ok() const { return cones_equal && roots_match; }
};

ConeCheck verify_cone_equality(const ArrangementFaces& faces, std::size_t face);

/// JSON array of {"face": covector, "fixed_part": [...], "generators": [[...]], "dim": d}.
std::string tau_to_json(const ArrangementFaces& faces);

}  // namespace facelat
