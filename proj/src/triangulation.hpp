#pragma once

#include <vector>

#include "corner/rational.hpp"

namespace corner::detail {

struct PlacingResult {
  /// Indices (into the input) of the extreme points of the hull.
  std::vector<std::size_t> vertices;
  /// Sum of |det| over the simplices of the triangulation, i.e. d! * volume.
  Integer det_sum;
};

/// Placing triangulation of distinct integer points spanning Z^d (d >= 1).
/// Runs on native 128-bit integers when a Hadamard bound shows no overflow
/// is possible, otherwise on GMP integers.
PlacingResult triangulate(const std::vector<std::vector<Integer>>& points);

}  // namespace corner::detail
