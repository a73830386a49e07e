#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fudg/bigint.hpp"

namespace fudg::detail {

/// Number of spanning in-trees rooted at vertex m of the graph whose vertex
/// i < m may take any parent in heads[i]. Fraction-free Gaussian
/// elimination on the out-degree Laplacian with the root removed.
BigInt count_in_trees(std::span<const std::vector<std::uint32_t>> heads);

}  // namespace fudg::detail
