#pragma once

#include <optional>
#include <span>

#include "corner/linalg.hpp"

namespace corner {

/// Exact phase-one simplex: finds x >= 0 with a * x = b, or nullopt if none exists.
/// Bland's rule, so it terminates on degenerate systems.
std::optional<Vec> find_nonnegative_solution(const Matrix& a, const Vec& b);

/// True iff x is a convex combination of points.
bool in_convex_hull(std::span<const Vec> points, const Vec& x);

}  // namespace corner
