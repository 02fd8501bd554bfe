#pragma once

#include <vector>

#include "corner/rational.hpp"

namespace corner {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;  // row-major

Matrix identity_matrix(int n);

/// Exact determinant by fraction-carrying Gaussian elimination.
Rational determinant(Matrix m);

int rank(Matrix m);

/// Solves m * x = rhs for square nonsingular m. Throws std::domain_error if singular.
Vec solve(Matrix m, Vec rhs);

Vec multiply(const Matrix& m, const Vec& v);

Rational dot(const Vec& a, const Vec& b);

}  // namespace corner
