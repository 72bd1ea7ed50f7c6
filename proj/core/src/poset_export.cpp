#include "facelat/poset_export.hpp"

#include <json.hpp>
#include <sstream>

#include "facelat/error.hpp"

namespace facelat {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void check_labels(const FinitePoset& p, const std::vector<std::string>& labels) {
  if (labels.size() != p.size()) {
    throw Error(ErrorKind::DimensionMismatch, "one label per element required");
  }
}

}  // namespace

std::string poset_to_dot(const FinitePoset& p, const std::vector<std::string>& labels, std::string_view graph_name) {
  check_labels(p, labels);
  std::ostringstream out;
  out << "digraph " << quoted(std::string(graph_name)) << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << "  n" << i << " [label=" << quoted(labels[i]) << "];\n";
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_to_json(const FinitePoset& p, const std::vector<std::string>& labels) {
  check_labels(p, labels);
  nlohmann::json j;
  j["size"] = p.size();
  j["labels"] = labels;
  j["covers"] = nlohmann::json::array();
  for (auto [a, b] : p.covers()) j["covers"].push_back({a, b});
  return j.dump(2);
}

}  // namespace facelat
