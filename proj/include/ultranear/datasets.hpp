#pragma once

#include "ultranear/metric_trees.hpp"

#include <optional>
#include <string_view>

namespace ultranear {

/// Bundled example datasets, selectable from the CLI without files.
DissimilarityMap paper_n3();
DissimilarityMap paper_n4();
/// Immunological distances between dog, bear, raccoon, weasel, seal,
/// sea lion, cat and monkey.
DissimilarityMap paper_n8();

std::optional<DissimilarityMap> builtin_dataset(std::string_view name);

/// Reference enumerations for the bundled n=4 and n=8 datasets: one column
/// vector per extreme ray, entries in lexicographic pair order, columns in
/// their original published order. Used for cross-reference output and by the
/// test suite.
const std::vector<std::vector<Rat>>& reference_rays_n4();
const std::vector<std::vector<Rat>>& reference_rays_n8();

} // namespace ultranear
