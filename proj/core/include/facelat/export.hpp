#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facelat/faces.hpp"
#include "facelat/poset.hpp"

namespace facelat {

enum class Labeling { Interval, Covector, Both };

/// "interval", "covector" or "both". Throws ParseError otherwise.
Labeling parse_labeling(std::string_view text);

/// One label per face: "[B,R5]", "(0,+,+)" or "[B,R5] (0,+,+)".
std::vector<std::string> face_labels(const ArrangementFaces& faces, Labeling labeling);
/// One label per region number: "B", "R3", the covector, or both.
std::vector<std::string> region_labels(const ArrangementFaces& faces, Labeling labeling);

/// DOT text of a poset over faces (size = faces.size()) or over regions
/// (size = faces.region_count()), labeled accordingly.
std::string export_dot(const ArrangementFaces& faces, const FinitePoset& poset, Labeling labeling,
                       std::string_view graph_name = "poset");

}  // namespace facelat
