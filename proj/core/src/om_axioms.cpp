#include "facelat/om_axioms.hpp"

namespace facelat {

std::string_view to_string(OmAxiom axiom) {
  switch (axiom) {
    case OmAxiom::Zero: return "zero";
    case OmAxiom::Opposite: return "opposite";
    case OmAxiom::Composition: return "composition";
    case OmAxiom::Elimination: return "elimination";
  }
  return "unknown";
}

bool OmReport::violates(OmAxiom a) const {
  for (const auto& v : violations) {
    if (v.axiom == a) return true;
  }
  return false;
}

OmReport check_om_axioms(const CovectorSet& set, OmCheckOptions options) {
  OmReport report;
  const std::size_t len = set.length();
  auto done = [&]() { return !options.all_witnesses && !report.violations.empty(); };

  if (!set.contains(SignVector::zero(len))) {
    report.violations.push_back({OmAxiom::Zero, SignVector::zero(len), {}, std::nullopt});
    if (done()) return report;
  }
  for (const auto& f : set) {
    if (!set.contains(opposite(f))) {
      report.violations.push_back({OmAxiom::Opposite, f, {}, std::nullopt});
      if (done()) return report;
    }
  }
  for (const auto& f : set) {
    for (const auto& g : set) {
      if (!set.contains(compose(f, g))) {
        report.violations.push_back({OmAxiom::Composition, f, g, std::nullopt});
        if (done()) return report;
      }
    }
  }

  // Elimination: for H in S(F,G) some X has X(H) = 0 and agrees with F o G
  // off S(F,G).
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const SignVector& f = set[i];
      const SignVector& g = set[j];
      const HyperplaneSet sep = separation(f, g);
      if (sep.none()) continue;
      const SignVector fg = compose(f, g);
      const HyperplaneSet keep = sep.complement();
      bool failed = false;
      sep.for_each([&](std::size_t h) {
        if (failed && !options.all_witnesses) return;
        bool found = false;
        for (const auto& x : set) {
          if (x[h] != Sign::Zero) continue;
          if (!Bitset::agree_on(x.plus_set(), fg.plus_set(), keep)) continue;
          if (!Bitset::agree_on(x.minus_set(), fg.minus_set(), keep)) continue;
          found = true;
          break;
        }
        if (!found) {
          report.violations.push_back({OmAxiom::Elimination, f, g, h});
          failed = true;
        }
      });
      if (done()) return report;
    }
  }
  return report;
}

}  // namespace facelat
