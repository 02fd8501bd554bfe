#include "corner/mixed_volume.hpp"

#include <bit>
#include <optional>
#include <stdexcept>
#include <string>

namespace corner {

VolumePolynomial::VolumePolynomial(int n, std::vector<Rational> coefficients) : n_(n), coeffs_(std::move(coefficients)) {
  if (static_cast<int>(coeffs_.size()) != n + 1) throw std::invalid_argument("VolumePolynomial: need n+1 coefficients");
}

Rational VolumePolynomial::mixed(int j) const {
  if (j < 0 || j > n_) throw std::out_of_range("mixed volume index j=" + std::to_string(j) + " outside [0, n]");
  return coeffs_[j] / Rational(binomial(n_, j));
}

Rational VolumePolynomial::evaluate(const Rational& t) const {
  // Horner in t, starting from the t^n coefficient c_0.
  Rational acc = 0;
  for (int j = 0; j <= n_; ++j) acc = acc * t + coeffs_[j];
  return acc;
}

VolumePolynomial& VolumePolynomial::operator+=(const VolumePolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("VolumePolynomial: degree mismatch");
  for (int j = 0; j <= n_; ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

VolumePolynomial volume_polynomial(const VPolytope& k, const VPolytope& t) {
  if (k.dim() != t.dim()) throw std::invalid_argument("volume_polynomial: dimension mismatch");
  const int n = k.dim();
  Matrix vandermonde(n + 1, Vec(n + 1));
  Vec values(n + 1);
  for (int node = 0; node <= n; ++node) {
    // Row: [t^n, t^(n-1), ..., 1] so the solution is (c_0, ..., c_n).
    Rational power = 1;
    for (int col = n; col >= 0; --col) {
      vandermonde[node][col] = power;
      power *= node;
    }
    values[node] = node == 0 ? volume(k) : volume(minkowski_sum(k, scale(t, node)));
  }
  return VolumePolynomial(n, solve(std::move(vandermonde), std::move(values)));
}

Rational mixed_volume_pair(const VPolytope& k, const VPolytope& t, int j) {
  if (k.dim() != t.dim()) throw std::invalid_argument("mixed_volume_pair: dimension mismatch");
  if (j < 0 || j > k.dim()) throw std::out_of_range("mixed_volume_pair: j outside [0, n]");
  if (j == k.dim()) return volume(k);
  if (j == 0) return volume(t);
  return volume_polynomial(k, t).mixed(j);
}

Rational mixed_volume_tuple(std::span<const VPolytope> bodies) {
  if (bodies.empty()) throw std::invalid_argument("mixed_volume_tuple: empty list");
  const int n = bodies.front().dim();
  if (static_cast<int>(bodies.size()) != n) {
    throw std::invalid_argument("mixed_volume_tuple: need exactly n = " + std::to_string(n) + " bodies, got " +
                                std::to_string(bodies.size()));
  }
  for (const auto& b : bodies) {
    if (b.dim() != n) throw std::invalid_argument("mixed_volume_tuple: dimension mismatch");
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // Partial sums built from the sum without the lowest body.
  std::vector<std::optional<VPolytope>> sums(full + 1);
  Rational total = 0;
  for (std::uint64_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint64_t rest = s & (s - 1);
    sums[s] = rest == 0 ? bodies[low] : minkowski_sum(*sums[rest], bodies[low]);
    const Rational v = volume(*sums[s]);
    if ((n - std::popcount(s)) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  return total / Rational(factorial(n));
}

}  // namespace corner
