#include <gtest/gtest.h>

#include "facelat/cover_join.hpp"
#include "facelat/error.hpp"
#include "facelat/facial_weak_order.hpp"
#include "facelat/lattice.hpp"
#include "facelat/localization.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace facelat;
using fixture::a2_face;

namespace {

std::string interval_of(const std::string& name) { return fixture::a2().interval_label(a2_face(name)); }

std::vector<Arrangement> sample_arrangements() {
  std::vector<Arrangement> out = {generate("A", 2), generate("B", 2), generate("G2", 2), generate("A", 3),
                                  generate("demo", 3)};
  for (std::uint64_t seed = 10; seed < 13; ++seed) out.push_back(random_simplicial_rank3(seed, 7));
  return out;
}

}  // namespace

TEST(FacialIntervals, A2Examples) {
  EXPECT_EQ(interval_of("O"), "[B,R3]");
  EXPECT_EQ(interval_of("F1"), "[R1,R2]");
  EXPECT_EQ(interval_of("F0"), "[B,R1]");
  EXPECT_EQ(interval_of("F5"), "[B,R5]");
  for (const char* r : {"B", "R1", "R2", "R3", "R4", "R5"}) {
    const std::string label = r;
    EXPECT_EQ(interval_of(label), "[" + label + "," + label + "]");
  }
}

TEST(FacialIntervals, RegionsContainingFaceFormTheInterval) {
  for (const auto& arr : sample_arrangements()) {
    const ArrangementFaces faces(arr);
    const FinitePoset pr = poset_of_regions(faces);
    for (std::size_t f = 0; f < faces.size(); ++f) {
      const FacialInterval iv = facial_interval(faces, f);
      Bitset containing(pr.size());
      for (std::size_t r = 0; r < pr.size(); ++r) {
        if (is_face_of(faces.face(f), faces.face(faces.region_face(r)))) containing.set(r);
      }
      EXPECT_EQ(containing, pr.interval(iv.min_region, iv.max_region));
    }
  }
}

TEST(FacialIntervals, ContainmentReversesIntervals) {
  const auto& faces = fixture::a3();
  const FinitePoset pr = poset_of_regions(faces);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t g = 0; g < faces.size(); ++g) {
      const auto& a = faces.interval(f);
      const auto& b = faces.interval(g);
      const bool wider = pr.leq(a.min_region, b.min_region) && pr.leq(b.max_region, a.max_region);
      EXPECT_EQ(is_face_of(faces.face(f), faces.face(g)), wider);
    }
  }
}

TEST(FacialIntervals, BrokenCovectorSetIsReported) {
  const Arrangement arr = generate("A", 2);
  const CovectorSet partial = enumerate_covectors(arr).without(SignVector{-1, -1, 1});
  try {
    ArrangementFaces faces(arr, partial);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InternalInconsistency);
  }
}

TEST(PosetOfRegions, GradedBySeparationSize) {
  const auto& faces = fixture::a3();
  const FinitePoset pr = poset_of_regions(faces);
  EXPECT_EQ(pr.size(), 24u);
  EXPECT_EQ(pr.covers().size(), 36u);
  EXPECT_EQ(pr.bottom(), 0u);
  for (auto [a, b] : pr.covers()) EXPECT_EQ(faces.separation_set(a).count() + 1, faces.separation_set(b).count());
  const FinitePoset line = poset_of_regions(ArrangementFaces(build_arrangement({{1}}, {1})));
  EXPECT_EQ(line.size(), 2u);
  EXPECT_EQ(line.covers().size(), 1u);
}

TEST(FacialWeakOrder, A2Structure) {
  const auto& faces = fixture::a2();
  const FinitePoset fw = fwo_by_intervals(faces);
  EXPECT_EQ(fw.size(), 13u);
  EXPECT_TRUE(fw.leq(a2_face("F5"), faces.require(SignVector{-1, -1, 0})));  // [B,R5] <= [R2,R3]
  EXPECT_EQ(faces.interval_label(faces.require(SignVector{-1, -1, 0})), "[R2,R3]");
  EXPECT_TRUE(fw.covered_by(a2_face("B"), a2_face("F0")));
  EXPECT_TRUE(fw.leq(a2_face("B"), a2_face("F0")));
  EXPECT_FALSE(fw.comparable(a2_face("F0"), a2_face("F5")));
  EXPECT_TRUE(fw.leq(a2_face("B"), a2_face("R3")));
  EXPECT_EQ(fw.bottom(), a2_face("B"));
  EXPECT_EQ(fw.top(), a2_face("R3"));
}

TEST(FacialWeakOrder, FourConstructionsAgree) {
  for (const auto& arr : sample_arrangements()) {
    const ArrangementFaces faces(arr);
    const FinitePoset by_intervals = fwo_by_intervals(faces);
    EXPECT_EQ(fwo_by_covectors(faces), by_intervals);
    EXPECT_EQ(fwo_by_covers(faces), by_intervals);
    EXPECT_EQ(fwo_by_roots(faces), by_intervals);
    EXPECT_EQ(fwo_cover_edges(faces), by_intervals.covers());
  }
}

TEST(FacialWeakOrder, AgreesWithRawSignComparisons) {
  const auto& faces = fixture::b2();
  const FinitePoset fw = fwo_by_intervals(faces);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t g = 0; g < faces.size(); ++g) {
      EXPECT_EQ(fw.leq(f, g), oracle::fw_leq(faces.face(f), faces.face(g)));
    }
  }
}

TEST(FacialWeakOrder, CoverEdgesJoinAdjacentDimensions) {
  const auto& faces = fixture::a3();
  for (auto [f, g] : fwo_cover_edges(faces)) {
    const auto df = static_cast<long>(faces.dim(f));
    const auto dg = static_cast<long>(faces.dim(g));
    EXPECT_EQ(std::abs(df - dg), 1);
  }
}

TEST(FacialWeakOrder, TwoOfThree) {
  const auto& faces = fixture::a3();
  const FinitePoset fw = fwo_by_intervals(faces);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t g = 0; g < faces.size(); ++g) {
      const bool contained = is_face_of(faces.face(f), faces.face(g));
      const bool same_top = faces.interval(f).max_region == faces.interval(g).max_region;
      const bool below = fw.leq(f, g);
      if (contained && same_top) EXPECT_TRUE(below);
      if (contained && below) EXPECT_TRUE(same_top);
      if (same_top && below) EXPECT_TRUE(contained);
    }
  }
}

TEST(FacialWeakOrder, FacesOfBaseRegion) {
  const auto& faces = fixture::a3();
  const FinitePoset fw = fwo_by_intervals(faces);
  const SignVector& b = faces.face(faces.base_face());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const bool nonneg = faces.face(f).minus_set().none();
    EXPECT_EQ(nonneg, is_face_of(faces.face(f), b));
    if (!nonneg) continue;
    for (std::size_t g = 0; g < faces.size(); ++g) {
      if (!is_face_of(faces.face(g), b)) continue;
      EXPECT_EQ(is_face_of(faces.face(g), faces.face(f)), fw.leq(f, g));
    }
  }
}

TEST(FacialWeakOrder, RebasedIntervalsAreIsomorphic) {
  const ArrangementFaces& faces = fixture::a2();
  const FinitePoset fw = fwo_by_intervals(faces);
  const std::size_t x = a2_face("F1");
  const std::size_t y = a2_face("R3");
  // Any region below X works as new base; R1 is below [R1,R2].
  const std::size_t r1 = a2_face("R1");
  ASSERT_TRUE(fw.leq(r1, x));
  const Arrangement moved = rebase(faces.arrangement(), *relative_interior_point(faces.arrangement(), faces.face(r1)));
  const ArrangementFaces other(moved);
  const FinitePoset fw2 = fwo_by_intervals(other);
  // Faces keep their geometric identity; only the signs of flipped hyperplanes change.
  auto translate = [&](std::size_t f) {
    SignVector v = faces.face(f);
    for (std::size_t h : moved.flipped()) v.set(h, negate(v[h]));
    return other.require(v);
  };
  const Bitset iv = fw.interval(x, y);
  const Bitset iv2 = fw2.interval(translate(x), translate(y));
  ASSERT_EQ(iv.count(), iv2.count());
  iv.for_each([&](std::size_t a) {
    iv.for_each([&](std::size_t b) { EXPECT_EQ(fw.leq(a, b), fw2.leq(translate(a), translate(b))); });
  });
}

TEST(RootInversionSets, Examples) {
  const RootInversionSet b = root_inversion_set(SignVector{1, 1, 1});
  EXPECT_TRUE(b.positive.none());
  EXPECT_EQ(b.negative.count(), 3u);
  const RootInversionSet o = root_inversion_set(SignVector::zero(3));
  EXPECT_EQ(o.positive.count(), 3u);
  EXPECT_EQ(o.negative.count(), 3u);
  const RootInversionSet t = root_inversion_set(SignVector{-1, -1, -1});
  EXPECT_EQ(t.positive.count(), 3u);
  EXPECT_TRUE(t.negative.none());
  EXPECT_TRUE(roots_leq(b, o));
}

TEST(RootInversionSets, EveryHyperplaneContributesARoot) {
  for (const auto& c : fixture::a3().covectors()) {
    const RootInversionSet r = root_inversion_set(c);
    EXPECT_TRUE((r.positive | r.negative).count() == c.size());
  }
}

TEST(RootInversionSets, DifferenceFormAgrees) {
  const auto& faces = fixture::a3();
  std::vector<RootInversionSet> roots;
  for (const auto& c : faces.covectors()) roots.push_back(root_inversion_set(c));
  for (const auto& f : roots) {
    for (const auto& g : roots) EXPECT_EQ(roots_leq(f, g), roots_leq_by_difference(f, g));
  }
}

TEST(Localization, A2AtRay) {
  const auto& faces = fixture::a2();
  const Localization loc = localize(faces, a2_face("F1"));
  EXPECT_EQ(loc.map.sub_hyperplanes, (std::vector<std::size_t>{1}));
  std::set<SignVector> image(loc.map.projection.begin(), loc.map.projection.end());
  EXPECT_EQ(image.size(), 3u);
  const SignVector r2 = loc.map.projection[a2_face("R2")];
  for (const char* n : {"F2", "R3", "F3", "R4"}) EXPECT_EQ(loc.map.projection[a2_face(n)], r2) << n;
}

TEST(Localization, TrivialCases) {
  const auto& faces = fixture::a2();
  const Localization at_origin = localize(faces, a2_face("O"));
  EXPECT_EQ(at_origin.map.sub_hyperplanes.size(), 3u);
  for (std::size_t f = 0; f < faces.size(); ++f) EXPECT_EQ(at_origin.map.projection[f], faces.face(f));
  const Localization at_region = localize(faces, a2_face("R2"));
  EXPECT_TRUE(at_region.map.sub_hyperplanes.empty());
  EXPECT_EQ(ArrangementFaces(at_region.arrangement).size(), 1u);
}

TEST(Localization, BijectiveOnFacesAboveAndOrderPreserving) {
  const auto& faces = fixture::a3();
  const FinitePoset fw = fwo_by_intervals(faces);
  for (std::size_t x = 0; x < faces.size(); ++x) {
    const Localization loc = localize(faces, x);
    const ArrangementFaces local(loc.arrangement);
    const FinitePoset lfw = fwo_by_intervals(local);
    std::set<SignVector> hit;
    for (std::size_t g = 0; g < faces.size(); ++g) {
      if (!is_face_of(faces.face(x), faces.face(g))) continue;
      const SignVector p = loc.map.projection[g];
      EXPECT_TRUE(hit.insert(p).second);
      EXPECT_EQ(lift(loc.map, faces.face(x), p), faces.face(g));
    }
    EXPECT_EQ(hit.size(), local.size());
    for (std::size_t f = 0; f < faces.size(); f += 5) {
      for (std::size_t g = 0; g < faces.size(); ++g) {
        if (!fw.leq(f, g)) continue;
        EXPECT_TRUE(lfw.leq(local.require(loc.map.projection[f]), local.require(loc.map.projection[g])));
      }
    }
  }
}

TEST(Restriction, RegionRayAndOrigin) {
  const auto& faces = fixture::a2();
  const Restriction whole = restrict_to(faces, a2_face("R2"));
  EXPECT_EQ(whole.arrangement.dim(), 2u);
  EXPECT_EQ(whole.arrangement.size(), 3u);
  EXPECT_EQ(ArrangementFaces(whole.arrangement).size(), 13u);

  const Restriction ray = restrict_to(faces, a2_face("F0"));
  EXPECT_EQ(ray.arrangement.dim(), 1u);
  EXPECT_EQ(ray.arrangement.size(), 1u);  // both remaining traces are the origin of the line
  EXPECT_EQ(ray.members[0].size(), 2u);
  const ArrangementFaces on_ray(ray.arrangement);
  EXPECT_EQ(on_ray.size(), 3u);
  // The embedded base region of the restriction is the ray itself.
  EXPECT_EQ(embed(ray, SignVector{1}), faces.face(a2_face("F0")));
  EXPECT_EQ(embed(ray, SignVector{-1}), faces.face(a2_face("F3")));

  const Restriction origin = restrict_to(faces, a2_face("O"));
  EXPECT_EQ(origin.arrangement.size(), 0u);
  EXPECT_EQ(ArrangementFaces(origin.arrangement).size(), 1u);
}

TEST(Restriction, EmbeddedFacesAreFacesInsideTheSpan) {
  const auto& faces = fixture::a3();
  for (std::size_t x = 0; x < faces.size(); ++x) {
    const Restriction r = restrict_to(faces, x);
    const ArrangementFaces local(r.arrangement);
    std::size_t expected = 0;
    for (const auto& c : faces.covectors()) expected += faces.face(x).zero_set().is_subset_of(c.zero_set()) ? 1 : 0;
    EXPECT_EQ(local.size(), expected);
    for (const auto& y : local.covectors()) {
      const SignVector e = embed(r, y);
      EXPECT_TRUE(faces.index_of(e).has_value()) << e.to_string();
    }
  }
}

TEST(CoverJoin, A2Examples) {
  const auto& faces = fixture::a2();
  const FinitePoset fw = fwo_by_intervals(faces);
  const CoverJoinResult c1 = cover_join(faces, fw, a2_face("B"), a2_face("F0"), a2_face("F5"));
  EXPECT_EQ(c1.join, a2_face("O"));
  EXPECT_EQ(c1.kind, CoverJoinCase::Intersection);
  const CoverJoinResult c2 = cover_join(faces, fw, a2_face("O"), a2_face("F2"), a2_face("F3"));
  EXPECT_EQ(c2.join, a2_face("R3"));
  EXPECT_EQ(c2.kind, CoverJoinCase::TwoFace);
  const CoverJoinResult same = cover_join(faces, fw, a2_face("B"), a2_face("F0"), a2_face("F0"));
  EXPECT_EQ(same.join, a2_face("F0"));
}

TEST(CoverJoin, RejectsNonCovers) {
  const auto& faces = fixture::a2();
  const FinitePoset fw = fwo_by_intervals(faces);
  try {
    cover_join(faces, fw, a2_face("B"), a2_face("O"), a2_face("F0"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCoversOfZ);
  }
}

TEST(CoverJoin, MatchesBruteForceJoinOnAllCoverPairs) {
  for (const auto* faces : {&fixture::a2(), &fixture::b2(), &fixture::a3()}) {
    const FinitePoset fw = fwo_by_intervals(*faces);
    const auto& all = faces->covectors().covectors();
    std::map<CoverJoinCase, int> seen;
    for (std::size_t z = 0; z < fw.size(); ++z) {
      const auto& ups = fw.upper_covers(z);
      for (std::size_t i = 0; i < ups.size(); ++i) {
        for (std::size_t j = i + 1; j < ups.size(); ++j) {
          const CoverJoinResult r = cover_join(*faces, fw, z, ups[i], ups[j]);
          EXPECT_EQ(r.join, oracle::brute_join(all, ups[i], ups[j]));
          ++seen[r.kind];
        }
      }
    }
    EXPECT_GT(seen[CoverJoinCase::Intersection], 0);
    EXPECT_GT(seen[CoverJoinCase::TwoFace], 0);
    EXPECT_GT(seen[CoverJoinCase::Reoriented], 0);
  }
}

TEST(CoverJoin, NonLatticeLocalizationIsRefused) {
  const ArrangementFaces faces(generate("demo", 3));
  const FinitePoset fw = fwo_by_intervals(faces);
  // The base region has four walls: its facets all cover it, and the
  // localization at the origin is the whole non-lattice arrangement.
  int refused = 0;
  const std::size_t b = faces.base_face();
  const auto& ups = fw.upper_covers(b);
  for (std::size_t i = 0; i < ups.size(); ++i) {
    for (std::size_t j = i + 1; j < ups.size(); ++j) {
      try {
        cover_join(faces, fw, b, ups[i], ups[j]);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
        ++refused;
      }
    }
  }
  EXPECT_GT(refused, 0);
}
