#include <random>

#include "corner/geometry.hpp"
#include "corner/lp.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace corner;
using namespace corner::testing;

TEST_CASE("rational parsing and formatting") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-1/2")) == "-1/2");
  CHECK(to_string(parse_rational("3")) == "3");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(parse_rational_list("1,2/3,-4") == std::vector<Rational>{1, Q("2/3"), -4});
  CHECK(binomial(5, 2) == 10);
  CHECK(factorial(5) == 120);
}

TEST_CASE("convex_hull removes interior points") {
  const auto p = hull_of({vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({Q("1/2"), Q("1/4")})});
  CHECK(p.vertices() == pts_of({vec({0, 0}), vec({0, 1}), vec({1, 0})}));
  CHECK(p.affine_dim() == 2);
}

TEST_CASE("convex_hull keeps lower-dimensional hulls") {
  const auto seg = hull_of({vec({0, 0}), vec({1, 1})});
  CHECK(seg.vertices() == pts_of({vec({0, 0}), vec({1, 1})}));
  CHECK(seg.affine_dim() == 1);
  CHECK(volume(seg) == 0);

  // Collinear points in R^3 and a planar square in R^3.
  const auto line = hull_of({vec({0, 0, 0}), vec({1, 2, 3}), vec({2, 4, 6}), vec({Q("1/2"), 1, Q("3/2")})});
  CHECK(line.vertices() == pts_of({vec({0, 0, 0}), vec({2, 4, 6})}));
  const auto square = hull_of({vec({0, 0, 1}), vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 1}),
                               vec({Q("1/2"), Q("1/2"), 1}), vec({Q("1/2"), 0, 1})});
  CHECK(square.vertices().size() == 4);
  CHECK(square.affine_dim() == 2);
}

TEST_CASE("convex_hull of vertex sums gives the pentagon") {
  const auto sq = unit_cube(2);
  const auto tri = standard_simplex(2);
  std::vector<Vec> sums;
  for (const auto& a : sq.vertices()) {
    for (const auto& b : tri.vertices()) sums.push_back(vec({a[0] + b[0], a[1] + b[1]}));
  }
  CHECK(sums.size() == 12);
  const auto pent = convex_hull(sums);
  CHECK(pent.vertices() == pts_of({vec({0, 0}), vec({0, 2}), vec({1, 2}), vec({2, 0}), vec({2, 1})}));
  // Every removed sum lies in the hull; every kept one is not in the hull of the others.
  for (const auto& s : sums) CHECK(member(pent, s));
  for (std::size_t i = 0; i < pent.vertices().size(); ++i) {
    std::vector<Vec> others;
    for (std::size_t k = 0; k < pent.vertices().size(); ++k) {
      if (k != i) others.push_back(pent.vertices()[k]);
    }
    CHECK_FALSE(in_convex_hull(others, pent.vertices()[i]));
  }
}

TEST_CASE("convex_hull errors") {
  std::vector<Vec> empty;
  CHECK_THROWS_AS(convex_hull(empty), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull(pts_of({vec({0, 0}), vec({1})})), std::invalid_argument);
  CHECK_THROWS_AS(convex_hull(pts_of({Vec(9, Rational(0))})), std::invalid_argument);
}

TEST_CASE("volume examples") {
  CHECK(volume(unit_cube(3)) == 1);
  CHECK(volume(standard_simplex(3)) == Q("1/6"));
  const auto pent = hull_of({vec({0, 0}), vec({2, 0}), vec({2, 1}), vec({1, 2}), vec({0, 2})});
  CHECK(volume(pent) == Q("7/2"));
  CHECK(volume(pent) == shoelace_area(pent.vertices()));
  CHECK(volume(standard_simplex(5)) == Q("1/120"));
  CHECK(volume(origin(3)) == 0);
}

TEST_CASE("relative_volume examples") {
  CHECK(relative_volume(hull_of({vec({0, 0, 0}), vec({0, 3, 0})}), CoordSubspace(3, 0b010)) == 3);
  CHECK(relative_volume(hull_of({vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0})}), CoordSubspace(3, 0b011)) ==
        Q("1/2"));
  CHECK(relative_volume(hull_of({vec({0, 0, 0}), vec({2, 0, 0}), vec({0, 0, 3})}), CoordSubspace(3, 0b101)) == 3);
  CHECK(relative_volume(origin(3), CoordSubspace(3, 0)) == 1);
  CHECK_THROWS_AS(relative_volume(standard_simplex(3), CoordSubspace(3, 0b011)), std::invalid_argument);
}

TEST_CASE("minkowski_sum examples") {
  const auto p = hull_of({vec({0, 0}), vec({3, 1}), vec({1, 2})});
  CHECK(minkowski_sum(p, point_polytope(vec({1, -1}))) == translate(p, vec({1, -1})));
  const auto pent = minkowski_sum(unit_cube(2), standard_simplex(2));
  CHECK(volume(pent) == Q("7/2"));
  for (const auto alpha : {Q(1), Q("1/3"), Q(4)}) {
    const auto quad = minkowski_sum(standard_simplex(2), hull_of({vec({0, 0}), vec({0, alpha})}));
    CHECK(quad.vertices() == pts_of({vec({0, 0}), vec({0, 1 + alpha}), vec({1, 0}), vec({1, alpha})}));
    CHECK(volume(quad) == Q("1/2") + alpha);
    CHECK(volume(quad) == shoelace_area(quad.vertices()));
  }
  CHECK_THROWS_AS(minkowski_sum(unit_cube(2), unit_cube(3)), std::invalid_argument);
}

TEST_CASE("scale examples") {
  CHECK(scale(standard_simplex(2), 2) == hull_of({vec({0, 0}), vec({2, 0}), vec({0, 2})}));
  const auto p = hull_of({vec({0, 0}), vec({3, 1}), vec({1, 2})});
  CHECK(scale(p, 1) == p);
  CHECK(volume(scale(standard_simplex(3), Q("1/2"))) == Q("1/48"));
  CHECK(scale(p, 0) == origin(2));
  CHECK_THROWS_AS(scale(p, -1), std::invalid_argument);
}

TEST_CASE("reflect examples") {
  CHECK(reflect(standard_simplex(2), SignVector::parse("--")) == hull_of({vec({0, 0}), vec({-1, 0}), vec({0, -1})}));
  const auto p = hull_of({vec({0, 0, 1}), vec({3, 1, 0}), vec({1, 2, 2}), vec({-1, 0, 0})});
  CHECK(reflect(p, SignVector::positive(3)) == p);
  for (const auto& s : SignVector::all(3)) CHECK(volume(reflect(p, s)) == volume(p));
}

TEST_CASE("project examples") {
  CHECK(project(standard_simplex(2), CoordSubspace(2, 0b01)) == hull_of({vec({0, 0}), vec({1, 0})}));
  CHECK(project(hull_of({vec({0, 0}), vec({2, 0}), vec({0, 3})}), CoordSubspace(2, 0b10)) ==
        hull_of({vec({0, 0}), vec({0, 3})}));
  const auto sq = hull_of({vec({-1, -1}), vec({-1, 1}), vec({1, -1}), vec({1, 1})});
  CHECK(project(sq, CoordSubspace(2, 0b01)) == hull_of({vec({-1, 0}), vec({1, 0})}));
}

TEST_CASE("member examples") {
  CHECK(member(standard_simplex(2), vec({Q("1/3"), Q("1/3")})));
  CHECK_FALSE(member(standard_simplex(2), vec({1, 1})));
  const auto pent = hull_of({vec({0, 0}), vec({2, 0}), vec({2, 1}), vec({1, 2}), vec({0, 2})});
  CHECK(member(pent, vec({2, 1})));
  CHECK(member(pent, vec({Q("3/2"), Q("3/2")})));
  CHECK_FALSE(member(pent, vec({Q("3/2"), Q("8/5")})));
  CHECK_THROWS_AS(member(pent, vec({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("join_hull examples") {
  const auto cross = join_hull(standard_simplex(2), negate(standard_simplex(2)));
  CHECK(cross.vertices() == pts_of({vec({-1, 0}), vec({0, -1}), vec({0, 1}), vec({1, 0})}));
  CHECK(volume(cross) == 2);
  CHECK(volume(cross) == shoelace_area(cross.vertices()));
  const auto p = hull_of({vec({0, 0}), vec({3, 1}), vec({1, 2})});
  CHECK(join_hull(p, p) == p);
  CHECK(join_hull(hull_of({vec({0}), vec({1})}), hull_of({vec({-1}), vec({0})})) == hull_of({vec({-1}), vec({1})}));
}

TEST_CASE("linear_map examples") {
  const auto p = hull_of({vec({0, 0, 1}), vec({3, 1, 0}), vec({1, 2, 2}), vec({-1, 0, 0})});
  CHECK(linear_map(p, identity_matrix(3)) == p);
  const std::vector<Rational> betas{2, Q("1/3"), 5};
  Matrix diag = identity_matrix(3);
  for (int i = 0; i < 3; ++i) diag[i][i] = 1 / betas[i];
  CHECK(linear_map(aligned_simplex(betas), diag) == standard_simplex(3));
  // Singular map drops dimension.
  Matrix flat = identity_matrix(3);
  flat[2][2] = 0;
  CHECK(linear_map(p, flat).affine_dim() == 2);
}

TEST_CASE("property: volume scales with |det A|") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 25) {
    const int n = 2 + checked % 3;
    const auto p = random_polytope(rng, n, n + 4);
    const auto a = random_matrix(rng, n);
    const Rational det = determinant(a);
    if (det == 0) continue;
    CHECK(volume(linear_map(p, a)) == abs(det) * volume(p));
    ++checked;
  }
}

TEST_CASE("property: scaling, reflection, translation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + trial % 4;
    const auto p = random_polytope(rng, n, n + 3);
    for (const auto lambda : {Q(0), Q("1/2"), Q(1), Q(2), Q(3)}) {
      CHECK(volume(scale(p, lambda)) == pow_rational(lambda, n) * volume(p));
    }
    for (const auto& s : SignVector::all(n)) CHECK(volume(reflect(p, s)) == volume(p));
    Vec t(n);
    for (int i = 0; i < n; ++i) t[i] = Rational(i + 1, 3);
    CHECK(volume(translate(p, t)) == volume(p));
    CHECK(convex_hull(p.vertices()) == p);
  }
}

TEST_CASE("property: hull idempotence and vertex irredundancy") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 3;
    const auto p = random_polytope(rng, n, 12, -4, 4);
    CHECK(convex_hull(p.vertices()) == p);
    for (std::size_t i = 0; i < p.vertices().size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t k = 0; k < p.vertices().size(); ++k) {
        if (k != i) others.push_back(p.vertices()[k]);
      }
      CHECK_FALSE(in_convex_hull(others, p.vertices()[i]));
    }
  }
}

TEST_CASE("property: monotonicity under inclusion") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + trial % 3;
    const auto outer = random_polytope(rng, n, n + 5);
    // Inner polytope: convex combinations of outer's vertices.
    std::vector<Vec> inner_pts;
    std::uniform_int_distribution<int> w(0, 3);
    for (int k = 0; k < n + 2; ++k) {
      Vec acc(n, Rational(0));
      Rational total = 0;
      for (const auto& v : outer.vertices()) {
        const int wt = w(rng);
        total += wt;
        for (int i = 0; i < n; ++i) acc[i] += wt * v[i];
      }
      if (total == 0) continue;
      for (auto& x : acc) x /= total;
      inner_pts.push_back(std::move(acc));
    }
    if (inner_pts.empty()) continue;
    const auto inner = convex_hull(inner_pts);
    REQUIRE(is_subset(inner, outer));
    CHECK(volume(inner) <= volume(outer));
  }
}

TEST_CASE("property: join_hull and minkowski_sum commute") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 2;
    const auto p = random_polytope(rng, n, 5);
    const auto q = random_polytope(rng, n, 4);
    CHECK(join_hull(p, q) == join_hull(q, p));
    CHECK(minkowski_sum(p, q) == minkowski_sum(q, p));
    CHECK(minkowski_sum(p, q).dim() == n);
  }
}

TEST_CASE("sign vectors and subspaces") {
  const auto s = SignVector::parse("+-+");
  CHECK(s[0] == 1);
  CHECK(s[1] == -1);
  CHECK(s.negated().str() == "-+-");
  CHECK(SignVector::all(3).size() == 8);
  CHECK(CoordSubspace::all_of_size(4, 2).size() == 6);
  CHECK(CoordSubspace(4, 0b0101).complement().mask() == 0b1010);
  CHECK(s.agrees_on(SignVector::parse("+--"), CoordSubspace(3, 0b011)));
  CHECK_FALSE(s.agrees_on(SignVector::parse("+--"), CoordSubspace(3, 0b100)));
  CHECK_THROWS_AS(SignVector::parse("+x"), std::invalid_argument);
  const int idx[] = {0, 0};
  CHECK_THROWS_AS(CoordSubspace::from_indices(3, idx), std::invalid_argument);
}

TEST_CASE("big coordinates take the arbitrary-precision path") {
  const Rational big = parse_rational("1000000000000000000000/7");
  const std::vector<Rational> sides{big, 3, Q("1/5")};
  const auto b = box(sides);
  CHECK(volume(b) == big * 3 * Q("1/5"));
  const auto s = aligned_simplex(sides);
  CHECK(volume(s) == big * 3 * Q("1/5") / 6);
  CHECK(volume(minkowski_sum(s, standard_simplex(3))) > volume(s));
}
