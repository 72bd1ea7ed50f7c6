#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "facelat/poset.hpp"

namespace facelat {

/// DOT digraph, node i labeled labels[i], one edge per cover pointing from
/// the lower element to the upper one. Output depends only on the inputs.
std::string poset_to_dot(const FinitePoset& p, const std::vector<std::string>& labels,
                         std::string_view graph_name = "poset");

/// {"size": n, "labels": [...], "covers": [[lower, upper], ...]}
std::string poset_to_json(const FinitePoset& p, const std::vector<std::string>& labels);

}  // namespace facelat
