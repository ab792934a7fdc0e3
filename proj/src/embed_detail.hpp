#pragma once

#include <vector>

#include "simemb/geometry.hpp"
#include "simemb/graph.hpp"

namespace simemb::detail {

/// tree_on_points without the size and general-position checks.
std::vector<int> place_tree_on_points(const SimpleGraph& tree, const std::vector<Point>& points);

}  // namespace simemb::detail
