#include "facelat/zonotope.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>

#include "facelat/linalg.hpp"
#include "facelat/lp.hpp"

namespace facelat {

namespace {

ExactMatrix unique_nonzero(ExactMatrix rows) {
  ExactMatrix out;
  std::set<std::string> seen;
  for (auto& r : rows) {
    if (is_zero(r)) continue;
    if (seen.insert(to_string(r)).second) out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json vector_json(const ExactVector& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

}  // namespace

ZonotopeFace tau(const Arrangement& arr, const SignVector& f) {
  ZonotopeFace z;
  z.fixed_part.assign(arr.dim(), 0);
  for (std::size_t h = 0; h < arr.size(); ++h) {
    switch (f[h]) {
      case Sign::Plus: z.fixed_part = add(z.fixed_part, arr.normal(h)); break;
      case Sign::Minus: z.fixed_part = subtract(z.fixed_part, arr.normal(h)); break;
      case Sign::Zero: z.free_generators.push_back(arr.normal(h)); break;
    }
  }
  z.dim = rank(z.free_generators, arr.dim());
  return z;
}

std::vector<std::size_t> zonotope_f_vector(const ArrangementFaces& faces) {
  std::vector<std::size_t> f;
  for (const auto& c : faces.covectors()) {
    const std::size_t d = tau(faces.arrangement(), c).dim;
    if (f.size() <= d) f.resize(d + 1, 0);
    ++f[d];
  }
  return f;
}

bool RationalCone::contains(const ExactVector& v) const { return in_cone(generators, v); }

bool RationalCone::equals(const RationalCone& other) const {
  for (const auto& g : generators) {
    if (!other.contains(g)) return false;
  }
  for (const auto& g : other.generators) {
    if (!contains(g)) return false;
  }
  return true;
}

RationalCone root_cone(const Arrangement& arr, const SignVector& f) {
  RationalCone c;
  for (std::size_t h = 0; h < arr.size(); ++h) {
    if (f[h] != Sign::Plus) c.generators.push_back(arr.normal(h));
    if (f[h] != Sign::Minus) c.generators.push_back(negated(arr.normal(h)));
  }
  return c;
}

RationalCone primal_cone(const ArrangementFaces& faces, std::size_t face) {
  const Arrangement& arr = faces.arrangement();
  std::vector<ExactVector> vertices;
  std::vector<ExactVector> own;
  for (std::size_t r : faces.regions()) {
    vertices.push_back(tau(arr, faces.face(r)).fixed_part);
    if (is_face_of(faces.face(face), faces.face(r))) own.push_back(vertices.back());
  }
  ExactMatrix diffs;
  for (const auto& v : vertices) {
    for (const auto& w : own) diffs.push_back(subtract(v, w));
  }
  return {unique_nonzero(std::move(diffs))};
}

ConeCheck verify_cone_equality(const ArrangementFaces& faces, std::size_t face) {
  const Arrangement& arr = faces.arrangement();
  const SignVector& f = faces.face(face);
  const RationalCone roots = root_cone(arr, f);
  const RationalCone primal = primal_cone(faces, face);
  ConeCheck out;
  out.cones_equal = roots.equals(primal);
  out.roots_match = true;
  for (std::size_t h = 0; h < arr.size() && out.roots_match; ++h) {
    const bool pos_in_r = f[h] != Sign::Plus;
    const bool neg_in_r = f[h] != Sign::Minus;
    if (primal.contains(arr.normal(h)) != pos_in_r) out.roots_match = false;
    if (primal.contains(negated(arr.normal(h))) != neg_in_r) out.roots_match = false;
  }
  return out;
}

std::string tau_to_json(const ArrangementFaces& faces) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : faces.covectors()) {
    const ZonotopeFace z = tau(faces.arrangement(), c);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : z.free_generators) gens.push_back(vector_json(g));
    out.push_back({{"face", c.to_string()}, {"fixed_part", vector_json(z.fixed_part)}, {"generators", gens},
                   {"dim", z.dim}});
  }
  return out.dump(2);
}

}  // namespace facelat
