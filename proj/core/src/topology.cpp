#include "facelat/topology.hpp"

#include <json.hpp>
#include <map>
#include <sstream>

#include "facelat/error.hpp"
#include "facelat/facial_weak_order.hpp"

namespace facelat {

namespace {

std::int64_t parity(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

std::string to_string(const HomotopyClass& c) {
  if (c.kind == HomotopyKind::Contractible) return "contractible";
  return "sphere(" + std::to_string(c.sphere_dim) + ")";
}

HomotopyClass classify_interval(const ArrangementFaces& faces, const FinitePoset& fw, std::size_t x, std::size_t y) {
  if (!fw.leq(x, y)) {
    throw Error(ErrorKind::NotComparable, faces.face(x).to_string() + " is not below " + faces.face(y).to_string());
  }
  const std::size_t z = largest_common_face(faces, x, y);
  if (!fw.leq(x, z) || !fw.leq(z, y)) return {};
  const std::size_t xz = faces.require(reorient(faces.face(x), faces.face(z)));
  if (largest_common_face(faces, xz, y) != z) return {};
  const int d = static_cast<int>(faces.dim(x) + faces.dim(y)) - 2 * static_cast<int>(faces.dim(z)) - 2;
  return {HomotopyKind::Sphere, d};
}

std::int64_t mobius_closed_form(const ArrangementFaces& faces, const FinitePoset& fw, std::size_t x, std::size_t y) {
  if (classify_interval(faces, fw, x, y).kind == HomotopyKind::Contractible) return 0;
  return parity(faces.dim(x) + faces.dim(y));
}

std::size_t MobiusReport::mismatches() const {
  std::size_t n = 0;
  for (const auto& r : intervals) n += r.agrees() ? 0 : 1;
  return n;
}

std::string MobiusReport::to_csv(const ArrangementFaces& faces) const {
  std::ostringstream out;
  out << "x,y,x_interval,y_interval,class,closed_form,recursive,agrees\n";
  for (const auto& r : intervals) {
    out << '"' << faces.face(r.x).to_string() << "\",\"" << faces.face(r.y).to_string() << "\","
        << faces.interval_label(r.x) << ',' << faces.interval_label(r.y) << ',' << to_string(r.homotopy) << ','
        << r.closed_form << ',' << r.recursive << ',' << (r.agrees() ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string MobiusReport::to_json(const ArrangementFaces& faces) const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : intervals) {
    out.push_back({{"x", faces.face(r.x).to_string()},
                   {"y", faces.face(r.y).to_string()},
                   {"x_interval", faces.interval_label(r.x)},
                   {"y_interval", faces.interval_label(r.y)},
                   {"class", to_string(r.homotopy)},
                   {"closed_form", r.closed_form},
                   {"recursive", r.recursive},
                   {"agrees", r.agrees()}});
  }
  return out.dump(2);
}

MobiusReport mobius_report(const ArrangementFaces& faces, const FinitePoset& fw) {
  const Mobius mu(fw);
  MobiusReport report;
  for (std::size_t x = 0; x < fw.size(); ++x) {
    fw.up(x).for_each([&](std::size_t y) {
      IntervalRecord r;
      r.x = x;
      r.y = y;
      r.homotopy = classify_interval(faces, fw, x, y);
      r.closed_form = r.homotopy.kind == HomotopyKind::Sphere ? parity(faces.dim(x) + faces.dim(y)) : 0;
      r.recursive = mu(x, y);
      report.intervals.push_back(r);
    });
  }
  return report;
}

EdelmanWalkerReport edelman_walker_check(const ArrangementFaces& faces) {
  const FinitePoset pr = poset_of_regions(faces);
  const Mobius mu(pr);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> facial;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& iv = faces.interval(f);
    facial.emplace(std::make_pair(iv.min_region, iv.max_region), f);
  }
  EdelmanWalkerReport report;
  for (std::size_t a = 0; a < pr.size(); ++a) {
    pr.up(a).for_each([&](std::size_t b) {
      ++report.intervals_checked;
      auto it = facial.find({a, b});
      const std::int64_t expected = it == facial.end() ? 0 : parity(faces.codim(it->second));
      const std::int64_t actual = mu(a, b);
      if (expected != actual) report.mismatches.push_back({a, b, expected, actual});
    });
  }
  return report;
}

}  // namespace facelat
