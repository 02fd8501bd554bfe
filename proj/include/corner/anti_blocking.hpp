#pragma once

#include <random>
#include <span>

#include "corner/geometry.hpp"

namespace corner {

/// A convex corner: a polytope in the closed nonnegative orthant that contains
/// the box [0, x] for each of its points. Equivalently P_E K = K n E for every
/// coordinate subspace E.
class AntiBlockingBody {
 public:
  /// Validates; throws std::invalid_argument if p is not anti-blocking.
  static AntiBlockingBody from_polytope(VPolytope p);

  const VPolytope& polytope() const { return body_; }
  int dim() const { return body_.dim(); }

  bool operator==(const AntiBlockingBody&) const = default;

 private:
  explicit AntiBlockingBody(VPolytope p) : body_(std::move(p)) {}
  friend AntiBlockingBody ab_hull(std::span<const Vec> generators);

  VPolytope body_;
};

/// conv{ g o m : g in generators, m in {0,1}^n }: the smallest anti-blocking
/// body containing the generators.
AntiBlockingBody ab_hull(std::span<const Vec> generators);
inline AntiBlockingBody ab_hull(const std::vector<Vec>& generators) {
  return ab_hull(std::span<const Vec>(generators));
}

/// True iff p lies in the nonnegative orthant and every vertex of every
/// coordinate projection of p is a member of p.
bool validate_ab(const VPolytope& p);

/// V_n(K[j], -K'[n-j]) = C(n,j)^-1 sum_{|E|=j} Vol_j(P_E K) Vol_{n-j}(P_E^perp K').
Rational ab_opposite_mixed(const AntiBlockingBody& k, const AntiBlockingBody& k_prime, int j);

/// Vol(K v -K') = sum_j V_n(K[n-j], -K'[j]).
Rational ab_join_volume(const AntiBlockingBody& k, const AntiBlockingBody& k_prime);

struct ReverseKleitmanReport {
  Rational lhs;  // V_n(K[j], T[n-j]), both bodies in the positive orthant
  Rational rhs;  // V_n(K[j], -T[n-j])
  bool holds;
  bool is_equality;
};

ReverseKleitmanReport reverse_kleitman_check(const AntiBlockingBody& k, const AntiBlockingBody& t, int j);

struct RogersShephardReport {
  Rational product;  // Vol_j(P_E K) * Vol_{n-j}(P_E^perp K)
  Rational bound;    // C(n, j) * Vol(K)
  bool holds;
  bool is_equality;
};

/// Projection/section Rogers-Shephard bound; for a corner the section K n E is P_E K.
RogersShephardReport rs_projection_check(const AntiBlockingBody& k, const CoordSubspace& e);

/// Down-closure of `generator_count` integer generators in [0, max_coord]^n,
/// topped up with a generator in [1, max_coord]^n if the result would be
/// lower-dimensional.
AntiBlockingBody random_anti_blocking(std::mt19937_64& rng, int n, int generator_count, int max_coord = 4);
inline AntiBlockingBody random_anti_blocking(std::mt19937_64& rng, int n) { return random_anti_blocking(rng, n, n); }

}  // namespace corner
