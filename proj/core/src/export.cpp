#include "facelat/export.hpp"

#include "facelat/error.hpp"
#include "facelat/poset_export.hpp"

namespace facelat {

Labeling parse_labeling(std::string_view text) {
  if (text == "interval") return Labeling::Interval;
  if (text == "covector") return Labeling::Covector;
  if (text == "both") return Labeling::Both;
  throw Error(ErrorKind::ParseError, "unknown labeling " + std::string(text));
}

std::vector<std::string> face_labels(const ArrangementFaces& faces, Labeling labeling) {
  std::vector<std::string> out;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    switch (labeling) {
      case Labeling::Interval: out.push_back(faces.interval_label(f)); break;
      case Labeling::Covector: out.push_back(faces.face(f).to_string()); break;
      case Labeling::Both: out.push_back(faces.interval_label(f) + " " + faces.face(f).to_string()); break;
    }
  }
  return out;
}

std::vector<std::string> region_labels(const ArrangementFaces& faces, Labeling labeling) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < faces.region_count(); ++r) {
    const std::string cov = faces.face(faces.region_face(r)).to_string();
    switch (labeling) {
      case Labeling::Interval: out.push_back(faces.region_label(r)); break;
      case Labeling::Covector: out.push_back(cov); break;
      case Labeling::Both: out.push_back(faces.region_label(r) + " " + cov); break;
    }
  }
  return out;
}

std::string export_dot(const ArrangementFaces& faces, const FinitePoset& poset, Labeling labeling,
                       std::string_view graph_name) {
  if (poset.size() == faces.size()) return poset_to_dot(poset, face_labels(faces, labeling), graph_name);
  if (poset.size() == faces.region_count()) return poset_to_dot(poset, region_labels(faces, labeling), graph_name);
  throw Error(ErrorKind::DimensionMismatch, "poset is neither over faces nor over regions");
}

}  // namespace facelat
