#include "facelat/json_io.hpp"

#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "facelat/error.hpp"

namespace facelat {

namespace {

using nlohmann::json;

ExactScalar scalar_from(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  throw Error(ErrorKind::ParseError, "expected a rational string, got " + j.dump());
}

ExactVector vector_from(const json& j, std::size_t dim, const std::string& what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, what + " must be an array");
  if (j.size() != dim) {
    throw Error(ErrorKind::DimensionMismatch,
                what + " has " + std::to_string(j.size()) + " coordinates, expected " + std::to_string(dim));
  }
  ExactVector v;
  for (const auto& x : j) v.push_back(scalar_from(x));
  return v;
}

json vector_to(const ExactVector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

}  // namespace

Arrangement parse_arrangement_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "top level must be an object");
  for (const char* key : {"dim", "hyperplanes", "base_point"}) {
    if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing key \"") + key + "\"");
  }
  if (!doc["dim"].is_number_unsigned()) throw Error(ErrorKind::ParseError, "\"dim\" must be a nonnegative integer");
  const auto dim = doc["dim"].get<std::size_t>();
  if (!doc["hyperplanes"].is_array()) throw Error(ErrorKind::ParseError, "\"hyperplanes\" must be an array");
  std::vector<ExactVector> normals;
  for (std::size_t i = 0; i < doc["hyperplanes"].size(); ++i) {
    normals.push_back(vector_from(doc["hyperplanes"][i], dim, "hyperplane " + std::to_string(i)));
  }
  return Arrangement::build(std::move(normals), vector_from(doc["base_point"], dim, "base_point"));
}

std::string arrangement_to_json(const Arrangement& arr) {
  json doc;
  doc["dim"] = arr.dim();
  doc["hyperplanes"] = json::array();
  for (const auto& n : arr.normals()) doc["hyperplanes"].push_back(vector_to(n));
  doc["base_point"] = vector_to(arr.base_point());
  return doc.dump(2) + "\n";
}

Arrangement load_arrangement(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
    buf << in.rdbuf();
  }
  return parse_arrangement_json(buf.str());
}

}  // namespace facelat
