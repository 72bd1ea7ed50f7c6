#include "facelat/suite.hpp"

#include <functional>
#include <json.hpp>
#include <map>
#include <memory>
#include <optional>

#include "facelat/error.hpp"
#include "facelat/facial_weak_order.hpp"
#include "facelat/lattice.hpp"
#include "facelat/om_axioms.hpp"
#include "facelat/topology.hpp"
#include "facelat/zonotope.hpp"

namespace facelat {

namespace {

using nlohmann::json;

// Shared, lazily built products so a suite enumerates faces and builds the
// orders at most once.
class Context {
 public:
  explicit Context(const Arrangement& arr) : arr_(arr) {}

  const ArrangementFaces& faces() {
    if (!faces_) faces_ = std::make_unique<ArrangementFaces>(arr_);
    return *faces_;
  }
  const FinitePoset& pr() {
    if (!pr_) pr_ = poset_of_regions(faces());
    return *pr_;
  }
  const FinitePoset& fw() {
    if (!fw_) fw_ = fwo_by_intervals(faces(), pr());
    return *fw_;
  }
  bool pr_lattice() {
    if (!pr_lattice_) pr_lattice_ = is_lattice(pr()).is_lattice;
    return *pr_lattice_;
  }
  bool fw_lattice() {
    if (!fw_lattice_) fw_lattice_ = is_lattice(fw()).is_lattice;
    return *fw_lattice_;
  }
  bool simplicial() {
    if (!simplicial_) simplicial_ = is_simplicial(arr_, faces().covectors());
    return *simplicial_;
  }

 private:
  const Arrangement& arr_;
  std::unique_ptr<ArrangementFaces> faces_;
  std::optional<FinitePoset> pr_;
  std::optional<FinitePoset> fw_;
  std::optional<bool> pr_lattice_;
  std::optional<bool> fw_lattice_;
  std::optional<bool> simplicial_;
};

struct Outcome {
  CheckStatus status;
  json details;
};

Outcome verdict(bool ok, json details) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)}; }

Outcome skipped(const std::string& reason) { return {CheckStatus::Skipped, json{{"reason", reason}}}; }

json face_json(const ArrangementFaces& faces, std::size_t f) {
  return json{{"covector", faces.face(f).to_string()}, {"interval", faces.interval_label(f)}};
}

json region_json(const ArrangementFaces& faces, std::size_t r) {
  return json{{"region", faces.region_label(r)}, {"covector", faces.face(faces.region_face(r)).to_string()}};
}

json lattice_json(const LatticeCheck& c, const std::function<json(std::size_t)>& name) {
  json j{{"is_lattice", c.is_lattice}};
  if (c.witness) {
    j["witness"] = {name(c.witness->first), name(c.witness->second)};
    j["missing"] = c.missing_join ? "join" : "meet";
  }
  return j;
}

Outcome check_om(Context& ctx) {
  const OmReport r = check_om_axioms(ctx.faces().covectors(), {.all_witnesses = false});
  json d{{"covectors", ctx.faces().size()}};
  if (!r.ok()) {
    const auto& v = r.violations.front();
    d["violation"] = {{"axiom", std::string(to_string(v.axiom))}, {"f", v.f.to_string()}, {"g", v.g.to_string()}};
    if (v.hyperplane) d["violation"]["hyperplane"] = *v.hyperplane;
  }
  return verdict(r.ok(), d);
}

Outcome check_equivalence(Context& ctx) {
  const auto& faces = ctx.faces();
  const FinitePoset& by_intervals = ctx.fw();
  const FinitePoset by_covectors = fwo_by_covectors(faces);
  const FinitePoset by_covers = fwo_by_covers(faces);
  const FinitePoset by_roots = fwo_by_roots(faces);
  const bool edges_are_hasse = fwo_cover_edges(faces) == by_intervals.covers();
  json d{{"faces", faces.size()},
         {"covectors", by_covectors == by_intervals},
         {"covers", by_covers == by_intervals},
         {"roots", by_roots == by_intervals},
         {"cover_edges_are_hasse", edges_are_hasse}};
  return verdict(by_covectors == by_intervals && by_covers == by_intervals && by_roots == by_intervals &&
                     edges_are_hasse,
                 d);
}

Outcome check_lattice(Context& ctx) {
  const auto& faces = ctx.faces();
  const LatticeCheck pr = is_lattice(ctx.pr());
  const LatticeCheck fw = is_lattice(ctx.fw());
  const BezReport pr_bez = bez_check(ctx.pr());
  const BezReport fw_bez = bez_check(ctx.fw());
  json d{{"poset_of_regions", lattice_json(pr, [&](std::size_t r) { return region_json(faces, r); })},
         {"facial_weak_order", lattice_json(fw, [&](std::size_t f) { return face_json(faces, f); })},
         {"bez_agrees", pr_bez.agrees() && fw_bez.agrees()}};
  const bool theorem = !pr.is_lattice || fw.is_lattice;
  return verdict(theorem && pr_bez.agrees() && fw_bez.agrees(), d);
}

Outcome check_self_dual_suite(Context& ctx) {
  const auto& faces = ctx.faces();
  std::vector<std::size_t> face_map(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) face_map[f] = faces.opposite_face(f);
  std::vector<std::size_t> region_map(faces.region_count());
  for (std::size_t r = 0; r < faces.region_count(); ++r) {
    region_map[r] = *faces.region_number(faces.opposite_face(faces.region_face(r)));
  }
  const bool fw = check_self_dual(ctx.fw(), face_map);
  const bool pr = check_self_dual(ctx.pr(), region_map);
  return verdict(fw && pr, json{{"facial_weak_order", fw}, {"poset_of_regions", pr}});
}

Outcome check_sublattice(Context& ctx) {
  if (!ctx.simplicial()) return skipped("arrangement is not simplicial");
  const auto& faces = ctx.faces();
  const SublatticeCheck s = is_sublattice(faces.regions(), ctx.fw());
  json d{{"regions", faces.region_count()}};
  if (s.witness) d["witness"] = {face_json(faces, s.witness->first), face_json(faces, s.witness->second)};
  return verdict(s.ok, d);
}

Outcome check_join_irr(Context& ctx) {
  if (!ctx.simplicial()) return skipped("arrangement is not simplicial");
  const auto& faces = ctx.faces();
  const FinitePoset& fw = ctx.fw();
  const FinitePoset& pr = ctx.pr();
  const auto to_set = [](const std::vector<std::size_t>& v, std::size_t n) {
    Bitset b(n);
    for (std::size_t x : v) b.set(x);
    return b;
  };
  const Bitset ji_fw = to_set(join_irreducibles(fw), fw.size());
  const Bitset mi_fw = to_set(meet_irreducibles(fw), fw.size());
  const Bitset ji_pr = to_set(join_irreducibles(pr), pr.size());
  const Bitset mi_pr = to_set(meet_irreducibles(pr), pr.size());

  json mismatches = json::array();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const bool low_codim = faces.codim(f) <= 1;
    const bool ji = low_codim && ji_pr.test(faces.interval(f).max_region);
    const bool mi = low_codim && mi_pr.test(faces.interval(f).min_region);
    if (ji != ji_fw.test(f)) mismatches.push_back({{"face", face_json(faces, f)}, {"kind", "join"}});
    if (mi != mi_fw.test(f)) mismatches.push_back({{"face", face_json(faces, f)}, {"kind", "meet"}});
  }
  json unpaired = json::array();
  for (auto [a, b] : fw.covers()) {
    if (faces.codim(a) == 1 && faces.codim(b) == 0 && ji_fw.test(a) != ji_fw.test(b)) {
      unpaired.push_back({{"lower", face_json(faces, a)}, {"upper", face_json(faces, b)}, {"kind", "join"}});
    }
    if (faces.codim(a) == 0 && faces.codim(b) == 1 && mi_fw.test(a) != mi_fw.test(b)) {
      unpaired.push_back({{"lower", face_json(faces, a)}, {"upper", face_json(faces, b)}, {"kind", "meet"}});
    }
  }
  json d{{"join_irreducibles", ji_fw.count()},
         {"meet_irreducibles", mi_fw.count()},
         {"characterization_mismatches", mismatches},
         {"unpaired", unpaired}};
  return verdict(mismatches.empty() && unpaired.empty(), d);
}

Outcome check_semidistributive(Context& ctx) {
  if (!ctx.simplicial()) return skipped("arrangement is not simplicial");
  const auto& faces = ctx.faces();
  const SemidistributivityCheck s = is_semidistributive(ctx.fw());
  json d = json::object();
  if (s.witness) {
    d["law"] = s.join_law ? "join" : "meet";
    d["witness"] = json::array();
    for (std::size_t x : *s.witness) d["witness"].push_back(face_json(faces, x));
  }
  return verdict(s.ok, d);
}

Outcome check_mobius(Context& ctx) {
  if (!ctx.pr_lattice()) return skipped("poset of regions is not a lattice");
  const auto& faces = ctx.faces();
  const MobiusReport r = mobius_report(faces, ctx.fw());
  json d{{"pairs", r.intervals.size()}, {"mismatches", r.mismatches()}};
  for (const auto& rec : r.intervals) {
    if (rec.agrees()) continue;
    d["first_mismatch"] = {{"x", face_json(faces, rec.x)},
                           {"y", face_json(faces, rec.y)},
                           {"closed_form", rec.closed_form},
                           {"recursive", rec.recursive}};
    break;
  }
  return verdict(r.ok(), d);
}

Outcome check_cones(Context& ctx) {
  const auto& faces = ctx.faces();
  json failures = json::array();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const ConeCheck c = verify_cone_equality(faces, f);
    if (!c.ok()) {
      failures.push_back({{"face", face_json(faces, f)}, {"cones_equal", c.cones_equal}, {"roots_match", c.roots_match}});
    }
  }
  return verdict(failures.empty(), json{{"faces", faces.size()}, {"failures", failures}});
}

Outcome check_edelman_walker(Context& ctx) {
  const auto& faces = ctx.faces();
  const EdelmanWalkerReport r = edelman_walker_check(faces);
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"low", region_json(faces, m.low)},
                          {"high", region_json(faces, m.high)},
                          {"expected", m.expected},
                          {"actual", m.actual}});
  }
  return verdict(r.ok(), json{{"intervals", r.intervals_checked}, {"mismatches", mismatches}});
}

Outcome check_conjecture(Context& ctx) {
  const bool pr = ctx.pr_lattice();
  const bool fw = ctx.fw_lattice();
  const char* evidence = pr == fw ? "consistent" : "counterexample";
  return {CheckStatus::Recorded, json{{"poset_of_regions_lattice", pr},
                                      {"facial_weak_order_lattice", fw},
                                      {"simplicial", ctx.simplicial()},
                                      {"evidence", evidence}}};
}

const std::map<std::string, std::function<Outcome(Context&)>>& registry() {
  static const std::map<std::string, std::function<Outcome(Context&)>> r = {
      {"om-axioms", check_om},
      {"equivalence", check_equivalence},
      {"lattice", check_lattice},
      {"self-dual", check_self_dual_suite},
      {"sublattice", check_sublattice},
      {"join-irr", check_join_irr},
      {"semidistributive", check_semidistributive},
      {"mobius", check_mobius},
      {"cones", check_cones},
      {"edelman-walker", check_edelman_walker},
      {"conjecture", check_conjecture},
  };
  return r;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Recorded: return "recorded";
    case CheckStatus::Error: return "error";
  }
  return "unknown";
}

bool SuiteReport::passed() const {
  for (const auto& r : results) {
    if (r.status == CheckStatus::Fail || r.status == CheckStatus::Error) return false;
  }
  return true;
}

std::string SuiteReport::to_json() const {
  json checks = json::array();
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"status", to_string(r.status)}, {"details", json::parse(r.details)}});
  }
  return json{{"passed", passed()}, {"checks", checks}}.dump(2);
}

const std::vector<std::string>& suite_check_names() {
  static const std::vector<std::string> names = {"om-axioms", "equivalence",      "lattice", "self-dual",
                                                 "sublattice", "join-irr",        "semidistributive",
                                                 "mobius",    "cones",            "edelman-walker", "conjecture"};
  return names;
}

SuiteReport run_suite(const Arrangement& arr, const std::vector<std::string>& checks) {
  SuiteReport report;
  Context ctx(arr);
  for (const auto& name : checks) {
    CheckResult result{name, CheckStatus::Error, "{}"};
    auto it = registry().find(name);
    if (it == registry().end()) {
      result.details = json{{"error", "unknown check"}}.dump();
    } else {
      try {
        Outcome o = it->second(ctx);
        result.status = o.status;
        result.details = o.details.dump();
      } catch (const std::exception& e) {
        result.details = json{{"error", e.what()}}.dump();
      }
    }
    report.results.push_back(std::move(result));
  }
  return report;
}

}  // namespace facelat
