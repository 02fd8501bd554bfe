#include "corner/anti_blocking.hpp"

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

bool in_positive_orthant(const VPolytope& p) {
  for (const auto& v : p.vertices()) {
    for (const auto& x : v) {
      if (x < 0) return false;
    }
  }
  return true;
}

}  // namespace

AntiBlockingBody AntiBlockingBody::from_polytope(VPolytope p) {
  if (!validate_ab(p)) throw std::invalid_argument("polytope is not anti-blocking");
  return AntiBlockingBody(std::move(p));
}

AntiBlockingBody ab_hull(std::span<const Vec> generators) {
  if (generators.empty()) throw std::invalid_argument("ab_hull: no generators");
  const int n = static_cast<int>(generators.front().size());
  if (n < 1 || n > max_dimension()) throw std::invalid_argument("ab_hull: bad dimension");
  std::vector<Vec> masked;
  masked.reserve(generators.size() << n);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n) throw std::invalid_argument("ab_hull: dimension mismatch");
    for (const auto& x : g) {
      if (x < 0) throw std::invalid_argument("ab_hull: negative generator coordinate");
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Vec v(n, Rational(0));
      for (int i = 0; i < n; ++i) {
        if ((m >> i) & 1U) v[i] = g[i];
      }
      masked.push_back(std::move(v));
    }
  }
  return AntiBlockingBody(convex_hull(masked));
}

bool validate_ab(const VPolytope& p) {
  if (!in_positive_orthant(p)) return false;
  const int n = p.dim();
  const std::uint64_t full = CoordSubspace::whole(n).mask();
  for (std::uint64_t m = 0; m < full; ++m) {
    const auto proj = project(p, CoordSubspace(n, m));
    for (const auto& v : proj.vertices()) {
      if (!member(p, v)) return false;
    }
  }
  return true;
}

Rational ab_opposite_mixed(const AntiBlockingBody& k, const AntiBlockingBody& k_prime, int j) {
  const int n = k.dim();
  if (k_prime.dim() != n) throw std::invalid_argument("ab_opposite_mixed: dimension mismatch");
  check_j(j, n);
  Rational sum = 0;
  for (const auto& e : CoordSubspace::all_of_size(n, j)) {
    const auto perp = e.complement();
    const Rational a = relative_volume(project(k.polytope(), e), e);
    if (a == 0) continue;
    sum += a * relative_volume(project(k_prime.polytope(), perp), perp);
  }
  return sum / Rational(binomial(n, j));
}

Rational ab_join_volume(const AntiBlockingBody& k, const AntiBlockingBody& k_prime) {
  if (k.dim() != k_prime.dim()) throw std::invalid_argument("ab_join_volume: dimension mismatch");
  const int n = k.dim();
  Rational sum = 0;
  for (int j = 0; j <= n; ++j) sum += ab_opposite_mixed(k, k_prime, n - j);
  return sum;
}

ReverseKleitmanReport reverse_kleitman_check(const AntiBlockingBody& k, const AntiBlockingBody& t, int j) {
  if (k.dim() != t.dim()) throw std::invalid_argument("reverse_kleitman_check: dimension mismatch");
  check_j(j, k.dim());
  ReverseKleitmanReport r;
  r.lhs = mixed_volume_pair(k.polytope(), t.polytope(), j);
  r.rhs = ab_opposite_mixed(k, t, j);
  r.holds = r.lhs <= r.rhs;
  r.is_equality = r.lhs == r.rhs;
  return r;
}

RogersShephardReport rs_projection_check(const AntiBlockingBody& k, const CoordSubspace& e) {
  const int n = k.dim();
  if (e.ambient_dim() != n) throw std::invalid_argument("rs_projection_check: dimension mismatch");
  const auto perp = e.complement();
  RogersShephardReport r;
  r.product = relative_volume(project(k.polytope(), e), e) * relative_volume(project(k.polytope(), perp), perp);
  r.bound = Rational(binomial(n, e.size())) * volume(k.polytope());
  r.holds = r.product <= r.bound;
  r.is_equality = r.product == r.bound;
  return r;
}

AntiBlockingBody random_anti_blocking(std::mt19937_64& rng, int n, int generator_count, int max_coord) {
  if (n < 1 || generator_count < 1 || max_coord < 1) throw std::invalid_argument("random_anti_blocking: bad parameters");
  std::uniform_int_distribution<int> coord(0, max_coord);
  std::vector<Vec> gens;
  for (int g = 0; g < generator_count; ++g) {
    Vec v(n);
    for (auto& x : v) x = coord(rng);
    gens.push_back(std::move(v));
  }
  auto body = ab_hull(gens);
  if (body.polytope().is_full_dimensional()) return body;
  std::uniform_int_distribution<int> positive(1, max_coord);
  Vec v(n);
  for (auto& x : v) x = positive(rng);
  gens.push_back(std::move(v));
  return ab_hull(gens);
}

}  // namespace corner
