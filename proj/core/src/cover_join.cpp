#include "facelat/cover_join.hpp"

#include <string>

#include "facelat/error.hpp"
#include "facelat/facial_weak_order.hpp"
#include "facelat/lattice.hpp"
#include "facelat/localization.hpp"

namespace facelat {

std::string_view to_string(CoverJoinCase c) {
  switch (c) {
    case CoverJoinCase::Equal: return "equal";
    case CoverJoinCase::Intersection: return "intersection";
    case CoverJoinCase::TwoFace: return "two-face";
    case CoverJoinCase::Reoriented: return "reoriented";
  }
  return "unknown";
}

namespace {

struct LocalView {
  Localization loc;
  ArrangementFaces faces;
};

LocalView local_view(const ArrangementFaces& faces, std::size_t at) {
  Localization loc = localize(faces, at);
  ArrangementFaces local(loc.arrangement);
  const auto check = is_lattice(poset_of_regions(local));
  if (!check.is_lattice) {
    throw Error(ErrorKind::NotALattice, "poset of regions of the localization at " + faces.face(at).to_string() +
                                            " is not a lattice");
  }
  return {std::move(loc), std::move(local)};
}

}  // namespace

CoverJoinResult cover_join(const ArrangementFaces& faces, const FinitePoset& fw, std::size_t z, std::size_t x,
                           std::size_t y) {
  if (!fw.covered_by(z, x) || !fw.covered_by(z, y)) {
    throw Error(ErrorKind::NotCoversOfZ, faces.face(x).to_string() + " and " + faces.face(y).to_string() +
                                             " do not both cover " + faces.face(z).to_string());
  }
  if (x == y) return {x, CoverJoinCase::Equal, x};

  const SignVector& fz = faces.face(z);
  const SignVector& fx = faces.face(x);
  const SignVector& fy = faces.face(y);

  if (is_face_of(fx, fz) && is_face_of(fy, fz)) {
    // In A_{X cap Y} the two covers meet only at the origin, which is their join.
    const std::size_t w = largest_common_face(faces, x, y);
    LocalView v = local_view(faces, w);
    const SignVector local_join = SignVector::zero(v.loc.map.sub_hyperplanes.size());
    return {faces.require(lift(v.loc.map, faces.face(w), local_join)), CoverJoinCase::Intersection, w};
  }

  if (is_face_of(fz, fx) && is_face_of(fz, fy)) {
    LocalView v = local_view(faces, z);
    const auto& sub = v.loc.map.sub_hyperplanes;
    const SignVector lx = project(fx, sub);
    const SignVector ly = project(fy, sub);
    const SignVector top = SignVector::all(sub.size(), Sign::Minus);
    const SignVector w = compose(lx, ly);
    const auto wi = v.faces.index_of(w);
    if (!wi || !is_face_of(w, top) || v.faces.dim(*wi) != faces.dim(z) + 2) {
      throw Error(ErrorKind::InternalInconsistency, "rays " + lx.to_string() + ", " + ly.to_string() +
                                                        " span no 2-face of -B in the localization");
    }
    return {faces.require(lift(v.loc.map, fz, w)), CoverJoinCase::TwoFace, z};
  }

  std::size_t lo = x;
  std::size_t hi = y;
  if (!(is_face_of(fx, fz) && is_face_of(fz, fy))) std::swap(lo, hi);
  if (!(is_face_of(faces.face(lo), fz) && is_face_of(fz, faces.face(hi)))) {
    throw Error(ErrorKind::InternalInconsistency, "cover configuration fits none of the three cases");
  }
  LocalView v = local_view(faces, lo);
  const auto& sub = v.loc.map.sub_hyperplanes;
  const SignVector lz = project(fz, sub);
  const SignVector cone = reorient(project(faces.face(hi), sub), lz);
  const std::size_t ray_dim = faces.dim(z);
  std::optional<SignVector> other;
  for (std::size_t i = 0; i < v.faces.size(); ++i) {
    const SignVector& c = v.faces.face(i);
    if (v.faces.dim(i) != ray_dim || c == lz || !is_face_of(c, cone)) continue;
    if (other) throw Error(ErrorKind::InternalInconsistency, cone.to_string() + " has more than two rays");
    other = c;
  }
  if (!other) throw Error(ErrorKind::InternalInconsistency, cone.to_string() + " has no second ray");
  return {faces.require(lift(v.loc.map, faces.face(lo), opposite(*other))), CoverJoinCase::Reoriented, lo};
}

}  // namespace facelat
