#pragma once

#include <vector>

#include "corner/geometry.hpp"

namespace corner {

/// conv(0, alpha_1 e_1, ..., alpha_n e_n) with alpha_i >= 0.
class AlignedSimplex {
 public:
  explicit AlignedSimplex(std::vector<Rational> alphas);
  static AlignedSimplex standard(int n) { return AlignedSimplex(std::vector<Rational>(n, Rational(1))); }

  int dim() const { return static_cast<int>(alphas_.size()); }
  const std::vector<Rational>& alphas() const { return alphas_; }
  VPolytope polytope() const { return aligned_simplex(alphas_); }

 private:
  std::vector<Rational> alphas_;
};

/// V_n(K[j], Delta_n[n-j]) = max{ prod_{i in I} alpha_i : |I| = j } / n!.
Rational lemma_mixed_volume(const AlignedSimplex& s, int j);

/// V_n(K[j], T[n-j]) = max{ prod_I alpha * prod_{I^c} beta : |I| = j } / n!.
/// With every beta_i > 0 the maximizing I is the j largest ratios alpha_i / beta_i;
/// otherwise all C(n, j) subsets are scanned.
Rational corollary_mixed_volume(const AlignedSimplex& k, const AlignedSimplex& t, int j);

/// Integral of (1 - t_1 - ... - t_m)^power over the standard simplex Delta_m,
/// which is power! / (power + m)!.
Rational simplex_power_integral(int m, int power);

/// Vol_n(Delta_n + K) for K contained in sp{e_{n-k+1}, ..., e_n}, computed by
/// slicing over Delta_{n-k}: each slice is (1 - sum t) Delta_k + K, whose volume
/// polynomial comes from the mixed-volume engine in dimension k.
Rational fubini_sum_volume(const VPolytope& k_sub, int k);
/// Same, with k the smallest value for which the containment holds.
Rational fubini_sum_volume(const VPolytope& k_sub);

/// Vol(Delta_n + lambda K) = sum_j C(n,j) lambda^j alpha_(1) ... alpha_(j) / n!
/// with the alphas sorted in decreasing order.
Rational simplex_sum_series(const AlignedSimplex& s, const Rational& lambda);

/// The two parts of Delta_n + K = (e_n + K) u (Delta_n + P_{e_n^perp} K), after
/// reordering coordinates so the alphas decrease. All three volumes are direct
/// hull computations.
struct SimplexSumSplit {
  Rational total;  // Vol(Delta_n + K)
  Rational apex;   // Vol(e_n + K)
  Rational base;   // Vol(Delta_n + P_{e_n^perp} K)
};
SimplexSumSplit simplex_sum_split(const AlignedSimplex& s);

/// For Delta_k against the aligned simplex K = conv(0, alpha_i e_i), j copies of Delta_k:
///   max_term   = V_k(Delta_k[j], K[k-j])  = max_{|I|=k-j} prod_I alpha / k!
///   subset_sum = V_k(Delta_k[j], -K[k-j]) = sum_{|I|=k-j} prod_I alpha / k!
/// The second is the opposite-orthant mixed volume. subset_sum >= max_term, strictly
/// when k >= 2, 1 <= j <= k-1 and every alpha_i > 0.
struct EqualityGap {
  Rational max_term;
  Rational subset_sum;
  Rational gap() const { return subset_sum - max_term; }
};
EqualityGap godbersen_equality_values(const AlignedSimplex& k_minus, int j);

}  // namespace corner
