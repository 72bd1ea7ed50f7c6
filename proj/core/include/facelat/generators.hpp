#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "facelat/arrangement.hpp"

namespace facelat {

/// Accepted family names: "A", "B", "D", "G2" and "demo" (alias
/// "hexagonal-nonsimplicial-demo"). "H3" and anything else raise
/// UnsupportedFamily.
///
/// Coxeter families use the fundamental chamber containing (n, n-1, ..., 1)
/// as base region and are returned essentialized, so the result always has
/// dimension `rank`. The demo is the four planes x, y, z, x+y+z in dimension
/// 3; `base_region` picks its base region by position in the lexicographic
/// list of regions oriented by (1,1,1), and defaults to the first region
/// with four walls. `base_region` is rejected for the other families.
Arrangement generate(std::string_view family, std::size_t rank, std::optional<std::size_t> base_region = {});

/// Families generate() understands, in canonical spelling.
const std::vector<std::string>& generator_families();

/// A random essential simplicial arrangement in dimension 3 with at most
/// `max_hyperplanes` hyperplanes: a subset of the primitive {-1,0,1}
/// directions passed through a random invertible rational matrix, with a
/// random base region. The same seed always gives the same arrangement.
Arrangement random_simplicial_rank3(std::uint64_t seed, std::size_t max_hyperplanes = 8);

}  // namespace facelat
