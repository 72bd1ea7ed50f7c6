#pragma once

#include <map>
#include <string>

#include "facelat/faces.hpp"
#include "facelat/generators.hpp"

namespace fixture {

/// Named faces of the rank-2 type-A arrangement, hyperplanes in the order
/// x1-x2, x1-x3, x2-x3.
inline const std::map<std::string, facelat::SignVector>& a2_names() {
  static const std::map<std::string, facelat::SignVector> names = {
      {"B", {1, 1, 1}},    {"R1", {-1, 1, 1}},  {"R2", {-1, -1, 1}}, {"R3", {-1, -1, -1}},
      {"R4", {1, -1, -1}}, {"R5", {1, 1, -1}},  {"F0", {0, 1, 1}},   {"F1", {-1, 0, 1}},
      {"F2", {-1, -1, 0}}, {"F3", {0, -1, -1}}, {"F4", {1, 0, -1}},  {"F5", {1, 1, 0}},
      {"O", {0, 0, 0}},
  };
  return names;
}

inline const facelat::ArrangementFaces& a2() {
  static const facelat::ArrangementFaces faces(facelat::generate("A", 2));
  return faces;
}

inline std::size_t a2_face(const std::string& name) { return a2().require(a2_names().at(name)); }

inline const facelat::ArrangementFaces& a3() {
  static const facelat::ArrangementFaces faces(facelat::generate("A", 3));
  return faces;
}

inline const facelat::ArrangementFaces& b2() {
  static const facelat::ArrangementFaces faces(facelat::generate("B", 2));
  return faces;
}

}  // namespace fixture
