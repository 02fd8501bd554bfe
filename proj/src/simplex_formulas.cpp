#include "corner/simplex_formulas.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "corner/mixed_volume.hpp"

namespace corner {

namespace {

void check_j(int j, int n) {
  if (j < 0 || j > n) {
    throw std::out_of_range("j=" + std::to_string(j) + " outside [0, " + std::to_string(n) + "]");
  }
}

std::vector<Rational> sorted_descending(std::vector<Rational> v) {
  std::stable_sort(v.begin(), v.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return v;
}

Rational product_of_first(const std::vector<Rational>& v, int count) {
  Rational p = 1;
  for (int i = 0; i < count; ++i) p *= v[i];
  return p;
}

Rational inverse_factorial(int n) { return Rational(Integer(1), factorial(n)); }

}  // namespace

AlignedSimplex::AlignedSimplex(std::vector<Rational> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) throw std::invalid_argument("AlignedSimplex: empty alpha list");
  for (const auto& a : alphas_) {
    if (a < 0) throw std::invalid_argument("AlignedSimplex: negative axis scalar");
  }
}

Rational lemma_mixed_volume(const AlignedSimplex& s, int j) {
  const int n = s.dim();
  check_j(j, n);
  // Ties in the sort cannot change the product.
  return product_of_first(sorted_descending(s.alphas()), j) * inverse_factorial(n);
}

Rational corollary_mixed_volume(const AlignedSimplex& k, const AlignedSimplex& t, int j) {
  const int n = k.dim();
  if (t.dim() != n) throw std::invalid_argument("corollary_mixed_volume: dimension mismatch");
  check_j(j, n);
  const auto& alpha = k.alphas();
  const auto& beta = t.alphas();

  const bool invertible = std::all_of(beta.begin(), beta.end(), [](const Rational& b) { return b > 0; });
  if (invertible || j == n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (invertible) {
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return alpha[a] / beta[a] > alpha[b] / beta[b]; });
    }
    Rational p = 1;
    for (int r = 0; r < n; ++r) p *= r < j ? alpha[order[r]] : beta[order[r]];
    return p * inverse_factorial(n);
  }

  Rational best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (std::popcount(m) != j) continue;
    Rational p = 1;
    for (int i = 0; i < n; ++i) p *= ((m >> i) & 1U) ? alpha[i] : beta[i];
    if (p > best) best = p;
  }
  return best * inverse_factorial(n);
}

Rational simplex_power_integral(int m, int power) {
  if (m < 0 || power < 0) throw std::invalid_argument("simplex_power_integral: negative argument");
  return Rational(factorial(power), factorial(power + m));
}

Rational fubini_sum_volume(const VPolytope& k_sub, int k) {
  const int n = k_sub.dim();
  if (k < 0 || k > n) throw std::out_of_range("fubini_sum_volume: k outside [0, n]");
  const int m = n - k;
  for (const auto& v : k_sub.vertices()) {
    for (int i = 0; i < m; ++i) {
      if (v[i] != 0) {
        throw std::invalid_argument("fubini_sum_volume: body is not contained in the last " + std::to_string(k) +
                                    " coordinates");
      }
    }
  }
  if (k == 0) return inverse_factorial(n);

  std::vector<Vec> reduced;
  for (const auto& v : k_sub.vertices()) reduced.emplace_back(v.begin() + m, v.end());
  // Vol_k(s Delta_k + K) = sum_i c_i s^i where c_i is the t^(k-i) coefficient of Vol(Delta_k + t K).
  const auto poly = volume_polynomial(standard_simplex(k), convex_hull(reduced));
  Rational total = 0;
  for (int i = 0; i <= k; ++i) total += poly.coefficient(i) * simplex_power_integral(m, i);
  return total;
}

Rational fubini_sum_volume(const VPolytope& k_sub) {
  const int n = k_sub.dim();
  int first_used = n;
  for (const auto& v : k_sub.vertices()) {
    for (int i = 0; i < n; ++i) {
      if (v[i] != 0) {
        first_used = std::min(first_used, i);
        break;
      }
    }
  }
  return fubini_sum_volume(k_sub, n - first_used);
}

Rational simplex_sum_series(const AlignedSimplex& s, const Rational& lambda) {
  if (lambda < 0) throw std::invalid_argument("simplex_sum_series: negative lambda");
  const int n = s.dim();
  const auto alphas = sorted_descending(s.alphas());
  Rational total = 0;
  Rational lambda_power = 1;
  Rational prefix = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      lambda_power *= lambda;
      prefix *= alphas[j - 1];
    }
    total += Rational(binomial(n, j)) * lambda_power * prefix;
  }
  return total * inverse_factorial(n);
}

SimplexSumSplit simplex_sum_split(const AlignedSimplex& s) {
  const int n = s.dim();
  const auto alphas = sorted_descending(s.alphas());
  const auto k = aligned_simplex(alphas);
  const auto delta = standard_simplex(n);
  Vec e_n(n, Rational(0));
  e_n[n - 1] = 1;
  SimplexSumSplit out;
  out.total = volume(minkowski_sum(delta, k));
  out.apex = volume(translate(k, e_n));
  out.base = volume(minkowski_sum(delta, project(k, CoordSubspace(n, (std::uint64_t{1} << (n - 1)) - 1))));
  return out;
}

EqualityGap godbersen_equality_values(const AlignedSimplex& k_minus, int j) {
  const int k = k_minus.dim();
  check_j(j, k);
  const int picked = k - j;
  const auto& alpha = k_minus.alphas();
  EqualityGap out;
  out.max_term = product_of_first(sorted_descending(alpha), picked) * inverse_factorial(k);
  Rational sum = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    if (std::popcount(m) != picked) continue;
    Rational p = 1;
    for (int i = 0; i < k; ++i) {
      if ((m >> i) & 1U) p *= alpha[i];
    }
    sum += p;
  }
  out.subset_sum = sum * inverse_factorial(k);
  return out;
}

}  // namespace corner
