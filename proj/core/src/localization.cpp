#include "facelat/localization.hpp"

#include "facelat/error.hpp"
#include "facelat/linalg.hpp"
#include "facelat/lp.hpp"

namespace facelat {

SignVector project(const SignVector& f, const std::vector<std::size_t>& sub) {
  SignVector out(sub.size());
  for (std::size_t k = 0; k < sub.size(); ++k) out.set(k, f[sub[k]]);
  return out;
}

Localization localize(const ArrangementFaces& faces, std::size_t x) {
  const Arrangement& arr = faces.arrangement();
  const SignVector& xf = faces.face(x);
  LocalizationMap map;
  map.face = x;
  map.sub_hyperplanes = xf.zero_set().indices();
  std::vector<ExactVector> normals;
  for (std::size_t h : map.sub_hyperplanes) normals.push_back(arr.normal(h));
  map.projection.reserve(faces.size());
  for (const auto& c : faces.covectors()) map.projection.push_back(project(c, map.sub_hyperplanes));
  return {Arrangement::build(std::move(normals), arr.base_point()), std::move(map)};
}

SignVector lift(const LocalizationMap& map, const SignVector& x, const SignVector& local) {
  if (local.size() != map.sub_hyperplanes.size()) {
    throw Error(ErrorKind::DimensionMismatch, "localized covector has the wrong length");
  }
  SignVector out = x;
  for (std::size_t k = 0; k < map.sub_hyperplanes.size(); ++k) out.set(map.sub_hyperplanes[k], local[k]);
  return out;
}

Restriction restrict_to(const ArrangementFaces& faces, std::size_t x) {
  const Arrangement& arr = faces.arrangement();
  const SignVector& xf = faces.face(x);
  Restriction r;
  r.face = x;
  r.zero_set = xf.zero_set();
  ExactMatrix zero_normals;
  r.zero_set.for_each([&](std::size_t h) { zero_normals.push_back(arr.normal(h)); });
  r.basis = nullspace(zero_normals, arr.dim());
  const std::size_t d = r.basis.size();

  ExactMatrix traces;
  for (std::size_t h = 0; h < arr.size(); ++h) {
    if (r.zero_set.test(h)) continue;
    ExactVector t(d);
    for (std::size_t k = 0; k < d; ++k) t[k] = dot(arr.normal(h), r.basis[k]);
    bool placed = false;
    for (std::size_t g = 0; g < traces.size(); ++g) {
      if (!parallel(traces[g], t)) continue;
      std::size_t k = 0;
      while (traces[g][k] == 0) ++k;
      r.members[g].emplace_back(h, sign(t[k]) == sign(traces[g][k]) ? 1 : -1);
      placed = true;
      break;
    }
    if (!placed) {
      traces.push_back(t);
      r.members.push_back({{h, 1}});
    }
  }

  // A point of span(X) realizing X, in basis coordinates.
  ExactMatrix signed_traces;
  for (std::size_t g = 0; g < traces.size(); ++g) {
    const auto [h, rel] = r.members[g].front();
    signed_traces.push_back(xf[h] == Sign::Minus ? negated(traces[g]) : traces[g]);
  }
  ExactVector base(d, 0);
  if (!signed_traces.empty()) {
    auto y = find_strictly_positive_point(signed_traces, d);
    if (!y) throw Error(ErrorKind::InternalInconsistency, xf.to_string() + " has no relative interior point");
    base = std::move(*y);
  }
  r.arrangement = Arrangement::build(std::move(traces), std::move(base));
  for (std::size_t g : r.arrangement.flipped()) {
    for (auto& member : r.members[g]) member.second = -member.second;
  }
  return r;
}

SignVector embed(const Restriction& r, const SignVector& y) {
  if (y.size() != r.members.size()) throw Error(ErrorKind::DimensionMismatch, "restricted covector has the wrong length");
  SignVector out(r.zero_set.size());
  for (std::size_t g = 0; g < r.members.size(); ++g) {
    for (auto [h, rel] : r.members[g]) out.set(h, rel > 0 ? y[g] : negate(y[g]));
  }
  return out;
}

}  // namespace facelat
