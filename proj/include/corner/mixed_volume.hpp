#pragma once

#include <span>
#include <vector>

#include "corner/geometry.hpp"

namespace corner {

/// Vol(K + tT) = sum_j coefficient(j) * t^(n-j), with
/// coefficient(j) = C(n, j) * V_n(K[j], T[n-j]).
class VolumePolynomial {
 public:
  VolumePolynomial(int n, std::vector<Rational> coefficients);

  int degree() const { return n_; }
  /// c_j, the coefficient of t^(n-j).
  const Rational& coefficient(int j) const { return coeffs_.at(j); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// V_n(K[j], T[n-j]) = c_j / C(n, j).
  Rational mixed(int j) const;
  Rational evaluate(const Rational& t) const;

  VolumePolynomial& operator+=(const VolumePolynomial& other);

 private:
  int n_;
  std::vector<Rational> coeffs_;
};

/// Interpolates Vol(K + tT) at t = 0, ..., n and solves the Vandermonde system exactly.
VolumePolynomial volume_polynomial(const VPolytope& k, const VPolytope& t);

/// V_n(K[j], T[n-j]).
Rational mixed_volume_pair(const VPolytope& k, const VPolytope& t, int j);

/// V_n(K_1, ..., K_n) by inclusion-exclusion over the 2^n - 1 partial sums.
Rational mixed_volume_tuple(std::span<const VPolytope> bodies);

}  // namespace corner
