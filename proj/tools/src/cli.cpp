#include "facelat_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "facelat/error.hpp"
#include "facelat/export.hpp"
#include "facelat/facial_weak_order.hpp"
#include "facelat/generators.hpp"
#include "facelat/json_io.hpp"
#include "facelat/mobius.hpp"
#include "facelat/poset_export.hpp"
#include "facelat/suite.hpp"
#include "facelat/topology.hpp"
#include "facelat/zonotope.hpp"

namespace facelat::cli {

namespace {

using nlohmann::json;

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::UnsupportedFamily:
    case ErrorKind::ZeroNormal:
    case ErrorKind::DuplicateHyperplane:
    case ErrorKind::BasePointOnHyperplane:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.size() == 1 && out.front() == "all") return suite_check_names();
  for (const auto& n : out) {
    const auto& known = suite_check_names();
    if (std::find(known.begin(), known.end(), n) == known.end()) {
      throw Error(ErrorKind::ParseError, "unknown check " + n);
    }
  }
  return out;
}

FinitePoset build_fwo(const ArrangementFaces& faces, const std::string& method) {
  if (method == "intervals") return fwo_by_intervals(faces);
  if (method == "covectors") return fwo_by_covectors(faces);
  if (method == "covers") return fwo_by_covers(faces);
  if (method == "roots") return fwo_by_roots(faces);
  throw Error(ErrorKind::ParseError, "unknown method " + method);
}

void print_covers(std::ostream& out, const FinitePoset& p, const std::vector<std::string>& labels) {
  for (auto [a, b] : p.covers()) out << labels[a] << " < " << labels[b] << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Facial weak order of a central hyperplane arrangement"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string family;
  std::size_t rank = 0;
  std::optional<std::size_t> base_region;
  auto* gen = app.add_subcommand("gen", "Print a generated arrangement as JSON");
  gen->add_option("family", family, "A, B, D, G2 or demo")->required();
  gen->add_option("rank", rank, "Rank")->required();
  gen->add_option("--base-region", base_region, "Base region of the demo (lexicographic region index)");

  std::string file;
  std::string labels_text = "interval";
  bool dot = false;
  bool as_json = false;

  auto* faces_cmd = app.add_subcommand("faces", "List faces with dimension and facial interval");
  faces_cmd->add_option("file", file, "Arrangement JSON ('-' for stdin)")->required();
  faces_cmd->add_flag("--json", as_json, "JSON output");

  auto* por = app.add_subcommand("por", "Poset of regions");
  por->add_option("file", file)->required();
  por->add_flag("--dot", dot, "DOT output");
  por->add_option("--labels", labels_text, "interval|covector|both");

  std::string method = "intervals";
  auto* fwo = app.add_subcommand("fwo", "Facial weak order");
  fwo->add_option("file", file)->required();
  fwo->add_flag("--dot", dot, "DOT output");
  fwo->add_option("--method", method, "intervals|covectors|covers|roots")
      ->check(CLI::IsMember({"intervals", "covectors", "covers", "roots"}));
  fwo->add_option("--labels", labels_text, "interval|covector|both");

  std::string suite;
  auto* check = app.add_subcommand("check", "Run property checks, print a JSON report");
  check->add_option("file", file)->required();
  check->add_option("--suite", suite, "Comma-separated checks, or 'all'")->required();

  std::vector<std::size_t> pair;
  std::string report_format = "csv";
  auto* mob = app.add_subcommand("mobius", "Möbius function of the facial weak order");
  mob->add_option("file", file)->required();
  mob->add_option("--pair", pair, "Face indices x y")->expected(2);
  mob->add_option("--format", report_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  bool verify = false;
  auto* zon = app.add_subcommand("zonotope", "Zonotope f-vector and tau images");
  zon->add_option("file", file)->required();
  zon->add_flag("--verify-cones", verify, "Check root cones against inner primal cones");

  std::string format;
  std::string which = "fwo";
  auto* exp = app.add_subcommand("export", "Export a poset");
  exp->add_option("file", file)->required();
  exp->add_option("--format", format, "dot|json")->required()->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--poset", which, "fwo|por")->check(CLI::IsMember({"fwo", "por"}));
  exp->add_option("--labels", labels_text, "interval|covector|both");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (gen->parsed()) {
      out << arrangement_to_json(generate(family, rank, base_region));
      return kPass;
    }

    const Labeling labeling = parse_labeling(labels_text);
    const Arrangement arr = load_arrangement(file);

    if (check->parsed()) {
      const SuiteReport report = run_suite(arr, split_names(suite));
      out << report.to_json() << '\n';
      return report.passed() ? kPass : kCheckFailure;
    }

    const ArrangementFaces faces(arr);

    if (faces_cmd->parsed()) {
      if (as_json) {
        json j = json::array();
        for (std::size_t f = 0; f < faces.size(); ++f) {
          j.push_back({{"index", f},
                       {"covector", faces.face(f).to_string()},
                       {"dim", faces.dim(f)},
                       {"interval", faces.interval_label(f)}});
        }
        out << j.dump(2) << '\n';
      } else {
        for (std::size_t f = 0; f < faces.size(); ++f) {
          out << f << '\t' << faces.face(f).to_string() << '\t' << faces.dim(f) << '\t' << faces.interval_label(f)
              << '\n';
        }
      }
      return kPass;
    }

    if (por->parsed()) {
      const FinitePoset p = poset_of_regions(faces);
      if (dot) {
        out << export_dot(faces, p, labeling, "poset_of_regions");
      } else {
        print_covers(out, p, region_labels(faces, labeling));
      }
      return kPass;
    }

    if (fwo->parsed()) {
      const FinitePoset p = build_fwo(faces, method);
      if (dot) {
        out << export_dot(faces, p, labeling, "facial_weak_order");
      } else {
        print_covers(out, p, face_labels(faces, labeling));
      }
      return kPass;
    }

    if (mob->parsed()) {
      const FinitePoset fw = fwo_by_intervals(faces);
      if (!pair.empty()) {
        for (std::size_t x : pair) {
          if (x >= faces.size()) throw Error(ErrorKind::ParseError, "face index " + std::to_string(x) + " out of range");
        }
        const std::size_t x = pair[0];
        const std::size_t y = pair[1];
        const std::int64_t recursive = mobius(fw, x, y);
        const HomotopyClass cls = classify_interval(faces, fw, x, y);
        const std::int64_t closed = mobius_closed_form(faces, fw, x, y);
        out << json{{"x", faces.face(x).to_string()},
                    {"y", faces.face(y).to_string()},
                    {"class", to_string(cls)},
                    {"closed_form", closed},
                    {"recursive", recursive},
                    {"agrees", closed == recursive}}
                   .dump(2)
            << '\n';
        return closed == recursive ? kPass : kCheckFailure;
      }
      const MobiusReport report = mobius_report(faces, fw);
      out << (report_format == "json" ? report.to_json(faces) + "\n" : report.to_csv(faces));
      return report.ok() ? kPass : kCheckFailure;
    }

    if (zon->parsed()) {
      json j{{"f_vector", zonotope_f_vector(faces)}, {"faces", json::parse(tau_to_json(faces))}};
      bool ok = true;
      if (verify) {
        json cones = json::array();
        for (std::size_t f = 0; f < faces.size(); ++f) {
          const ConeCheck c = verify_cone_equality(faces, f);
          ok = ok && c.ok();
          cones.push_back({{"face", faces.face(f).to_string()},
                           {"cones_equal", c.cones_equal},
                           {"roots_match", c.roots_match}});
        }
        j["cones"] = cones;
        j["cones_verified"] = ok;
      }
      out << j.dump(2) << '\n';
      return ok ? kPass : kCheckFailure;
    }

    if (exp->parsed()) {
      const FinitePoset p = which == "por" ? poset_of_regions(faces) : fwo_by_intervals(faces);
      const auto names = which == "por" ? region_labels(faces, labeling) : face_labels(faces, labeling);
      if (format == "dot") {
        out << poset_to_dot(p, names, which == "por" ? "poset_of_regions" : "facial_weak_order");
      } else {
        out << poset_to_json(p, names) << '\n';
      }
      return kPass;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kInputError : kCheckFailure;
  }
  return kInputError;
}

}  // namespace facelat::cli
