#pragma once

#include <vector>

#include "skelsum/point.hpp"
#include "skelsum/polytope.hpp"

namespace skelsum::detail {

/// Facets of conv(vertices). The input must consist of distinct extreme
/// points whose affine hull has dimension `dim`; facet vertex sets come back
/// sorted.
std::vector<Facet> enumerate_facets(const std::vector<Point>& vertices, int dim);

}  // namespace skelsum::detail
