#include <algorithm>
#include <random>

#include "corner/assembly.hpp"
#include "corner/mixed_volume.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace corner;
using namespace corner::testing;

namespace {

std::map<SignVector, AntiBlockingBody> all_pieces(int n, const AntiBlockingBody& body) {
  std::map<SignVector, AntiBlockingBody> m;
  for (const auto& s : SignVector::all(n)) m.emplace(s, body);
  return m;
}

std::map<SignVector, AntiBlockingBody> piece_map(const OrthantAssembly& a) {
  std::map<SignVector, AntiBlockingBody> m;
  for (const auto& s : SignVector::all(a.dim())) m.emplace(s, a.piece(s));
  return m;
}

VPolytope cross_polytope(int n) {
  std::vector<Vec> pts;
  for (int i = 0; i < n; ++i) {
    for (int sign : {1, -1}) {
      Vec v(n, Rational(0));
      v[i] = sign;
      pts.push_back(v);
    }
  }
  return convex_hull(pts);
}

int distinct_full_pieces(const OrthantAssembly& a) {
  std::vector<VPolytope> seen;
  for (const auto& s : SignVector::all(a.dim())) {
    const auto p = a.orthant_piece(s);
    if (!p.is_full_dimensional()) continue;
    if (std::find(seen.begin(), seen.end(), p) == seen.end()) seen.push_back(p);
  }
  return static_cast<int>(seen.size());
}

}  // namespace

TEST_CASE("assemble: cross-polytope from simplex pieces") {
  for (int n = 1; n <= 4; ++n) {
    const auto a = assemble(n, all_pieces(n, AntiBlockingBody::from_polytope(standard_simplex(n))));
    CHECK(global_hull(a) == cross_polytope(n));
    CHECK(lab_volume(a) == Rational(Integer(1) << n, factorial(n)));
  }
  const auto a2 = assemble(2, all_pieces(2, AntiBlockingBody::from_polytope(standard_simplex(2))));
  CHECK(lab_volume(a2) == 2);
  CHECK(shoelace_area(global_hull(a2).vertices()) == 2);
}

TEST_CASE("assemble: consistency violation reports a witness") {
  std::map<SignVector, AntiBlockingBody> m;
  m.emplace(SignVector::parse("++"), AntiBlockingBody::from_polytope(standard_simplex(2)));
  m.emplace(SignVector::parse("-+"), ab_hull(std::vector<Vec>{vec({1, 0}), vec({0, 2})}));
  try {
    (void)assemble(2, m);
    FAIL("expected AssemblyError");
  } catch (const AssemblyError& e) {
    CHECK(e.kind() == AssemblyError::Kind::consistency);
    REQUIRE(e.sigma().has_value());
    CHECK(e.sigma()->str() == "++");
    CHECK(e.tau()->str() == "-+");
    CHECK(e.subspace()->indices() == std::vector<int>{1});
  }
  // Missing pieces are {0}, which clashes with a nontrivial positive piece.
  std::map<SignVector, AntiBlockingBody> lonely;
  lonely.emplace(SignVector::positive(2), AntiBlockingBody::from_polytope(standard_simplex(2)));
  CHECK_THROWS_AS(assemble(2, lonely), AssemblyError);

  std::map<SignVector, AntiBlockingBody> wrong;
  wrong.emplace(SignVector::positive(3), AntiBlockingBody::from_polytope(standard_simplex(3)));
  CHECK_THROWS_AS(assemble(2, wrong), AssemblyError);
}

TEST_CASE("orthant_union_is_convex") {
  std::map<SignVector, AntiBlockingBody> l_shape;
  l_shape.emplace(SignVector::parse("++"), ab_hull(std::vector<Vec>{vec({1, 0})}));
  l_shape.emplace(SignVector::parse("+-"), ab_hull(std::vector<Vec>{vec({0, 1})}));
  CHECK_FALSE(orthant_union_is_convex(2, l_shape));

  std::map<SignVector, AntiBlockingBody> segment;
  segment.emplace(SignVector::parse("++"), ab_hull(std::vector<Vec>{vec({1, 0})}));
  segment.emplace(SignVector::parse("-+"), ab_hull(std::vector<Vec>{vec({2, 0})}));
  CHECK(orthant_union_is_convex(2, segment));
  CHECK(orthant_union_is_convex(2, {}));
  CHECK(orthant_union_is_convex(3, all_pieces(3, AntiBlockingBody::from_polytope(unit_cube(3)))));
}

TEST_CASE("from_unconditional") {
  for (int n = 1; n <= 3; ++n) {
    const auto cube = from_unconditional(AntiBlockingBody::from_polytope(unit_cube(n)));
    std::vector<Rational> sides(n, Rational(2));
    CHECK(global_hull(cube) == translate(box(sides), Vec(n, Rational(-1))));
    CHECK(lab_volume(cube) == Rational(Integer(1) << n));
    const auto cross = from_unconditional(AntiBlockingBody::from_polytope(standard_simplex(n)));
    CHECK(global_hull(cross) == cross_polytope(n));
  }
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2;
    const auto k = random_anti_blocking(rng, n);
    CHECK(lab_volume(from_unconditional(k)) == Rational(Integer(1) << n) * volume(k.polytope()));
  }
}

TEST_CASE("equality_family") {
  for (int n = 1; n <= 4; ++n) {
    const std::vector<Rational> ones(n, Rational(1));
    const auto a = equality_family(1, ones);
    CHECK(global_hull(a) == standard_simplex(n));
  }
  const std::vector<Rational> alphas{Q(2), Q("1/3"), Q(5)};
  const auto a = equality_family(1, alphas);
  CHECK(global_hull(a) == aligned_simplex(alphas));
  CHECK(lab_volume(a) == Q(2) * Q("1/3") * Q(5) / 6);

  const auto seg = equality_family(2, std::vector<Rational>{1}, 1);
  CHECK(global_hull(seg) == hull_of({vec({-1}), vec({1})}));
  const auto tri = equality_family(2, std::vector<Rational>{1, 1}, 1);
  CHECK(global_hull(tri) == hull_of({vec({1, 0}), vec({-1, 0}), vec({0, 1})}));
  CHECK(lab_volume(tri) == shoelace_area(global_hull(tri).vertices()));

  const auto c2 = equality_family(2, alphas, Q("7/2"));
  CHECK(global_hull(c2) == hull_of({vec({2, 0, 0}), vec({Q("-7/2"), 0, 0}), vec({0, Q("1/3"), 0}), vec({0, 0, 5})}));

  CHECK_THROWS_AS(equality_family(1, std::vector<Rational>{1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(equality_family(2, std::vector<Rational>{1, 1}, 0), std::invalid_argument);
  CHECK_THROWS_AS(equality_family(3, std::vector<Rational>{1, 1}), std::invalid_argument);
}

TEST_CASE("negate_assembly") {
  const auto cube = from_unconditional(AntiBlockingBody::from_polytope(unit_cube(3)));
  CHECK(negate_assembly(cube) == cube);
  const std::vector<Rational> alphas{Q(2), Q(3)};
  const auto a = equality_family(1, alphas);
  const auto neg = negate_assembly(a);
  CHECK(global_hull(neg) == hull_of({vec({0, 0}), vec({-2, 0}), vec({0, -3})}));
  CHECK(neg.piece(SignVector::negative(2)) == a.piece(SignVector::positive(2)));
  CHECK(negate_assembly(neg) == a);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_assembly(seed, 3, AssemblyStyle::glued);
    CHECK(global_hull(negate_assembly(g)) == reflect(global_hull(g), SignVector::negative(3)));
    // Rebuilding from the negated pieces revalidates and reproduces the hull.
    CHECK(global_hull(assemble(3, piece_map(negate_assembly(g)))) == negate(global_hull(g)));
  }
}

TEST_CASE("lab_volume and lab_mixed match direct hull computations") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const auto style = (n == 4 || seed % 2 == 0) ? AssemblyStyle::unconditional : AssemblyStyle::glued;
    const auto a = random_assembly(seed, n, style);
    const auto b = random_assembly(seed + 100, n, style);
    CHECK(lab_volume(a) == volume(convex_hull(a.hull().vertices())));
    const auto direct = volume_polynomial(global_hull(a), global_hull(b));
    for (int j = 0; j <= n; ++j) {
      CHECK(lab_mixed(a, b, j) == direct.mixed(j));
      CHECK(lab_mixed(a, a, j) == lab_volume(a));
    }
  }
  const auto cross = from_unconditional(AntiBlockingBody::from_polytope(standard_simplex(2)));
  CHECK(lab_mixed(cross, negate_assembly(cross), 1) == 2);
  CHECK_THROWS_AS(lab_mixed(cross, cross, 3), std::out_of_range);
}

TEST_CASE("projections agree over every shared subspace") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto a = random_assembly(seed, 3, AssemblyStyle::glued);
    const int n = a.dim();
    for (const auto& s : SignVector::all(n)) {
      for (const auto& t : SignVector::all(n)) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
          const CoordSubspace e(n, m);
          if (!s.agrees_on(t, e)) continue;
          CHECK(project(a.orthant_piece(s), e) == project(a.orthant_piece(t), e));
        }
      }
    }
  }
}

TEST_CASE("godbersen_check examples") {
  const auto simplex = equality_family(1, std::vector<Rational>(3, Rational(1)));
  const auto r = godbersen_check(simplex, 1);
  CHECK(r.mixed == Q("1/2"));
  CHECK(r.bound == Q("1/2"));
  CHECK(r.is_equality);
  CHECK_FALSE(r.trivial);

  const auto cube = from_unconditional(AntiBlockingBody::from_polytope(unit_cube(2)));
  const auto c = godbersen_check(cube, 1);
  CHECK(c.mixed == 4);
  CHECK(c.bound == 8);
  CHECK(c.ratio == Q("1/2"));
  CHECK_FALSE(c.is_equality);

  for (int n = 2; n <= 3; ++n) {
    const auto g = random_assembly(7, n, AssemblyStyle::glued);
    const auto z = godbersen_check(g, 0);
    CHECK(z.is_equality);
    CHECK(z.trivial);
    CHECK(z.mixed == lab_volume(g));
    const auto all = godbersen_check_all(g);
    REQUIRE(all.size() == static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
      const auto single = godbersen_check(g, j);
      CHECK(all[j].mixed == single.mixed);
      CHECK(all[j].bound == single.bound);
      CHECK(all[j].ratio == single.ratio);
    }
  }

  const auto segment = assemble(2, all_pieces(2, ab_hull(std::vector<Vec>{vec({1, 0})})));
  CHECK_THROWS_AS(godbersen_check(segment, 1), std::invalid_argument);
}

TEST_CASE("Godbersen inequality and equality cases") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<int> d(1, 6);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Rational> alphas(n);
    for (auto& x : alphas) x = Rational(d(rng), d(rng));
    const Rational beta(d(rng), d(rng));
    for (int family : {1, 2}) {
      for (const auto& r : godbersen_check_all(equality_family(family, alphas, beta))) {
        CHECK(r.ratio == 1);
        CHECK(r.is_equality);
      }
    }
  }
  for (int n = 2; n <= 3; ++n) {
    for (const auto& body : {unit_cube(n), standard_simplex(n)}) {
      const auto a = from_unconditional(AntiBlockingBody::from_polytope(body));
      for (const auto& r : godbersen_check_all(a)) {
        if (r.trivial) continue;
        CHECK(r.ratio < 1);
      }
    }
  }
  int glued_checked = 0;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const auto a = random_assembly(seed, n, AssemblyStyle::glued);
    const bool non_simplex = distinct_full_pieces(a) >= 2;
    for (const auto& r : godbersen_check_all(a)) {
      CHECK(r.ratio <= 1);
      if (non_simplex && !r.trivial) CHECK(r.ratio < 1);
    }
    glued_checked += non_simplex;
  }
  CHECK(glued_checked >= 6);
}

TEST_CASE("proof_chain_audit") {
  const std::vector<Rational> alphas{Q(2), Q(1), Q("3/2")};
  for (int j = 1; j <= 2; ++j) {
    const auto r1 = proof_chain_audit(equality_family(1, alphas), j);
    CHECK(r1.ratio == 1);
    CHECK(r1.exact_steps_hold());
    CHECK(r1.slack_steps().empty());
    const auto r2 = proof_chain_audit(equality_family(2, alphas, 4), j);
    CHECK(r2.ratio == 1);
    CHECK(r2.slack_steps().empty());
  }
  const auto cube = proof_chain_audit(from_unconditional(AntiBlockingBody::from_polytope(unit_cube(2))), 1);
  CHECK(cube.ratio == Q("1/2"));
  CHECK(cube.exact_steps_hold());
  CHECK(cube.inequalities_hold());
  const auto slack = cube.slack_steps();
  CHECK(std::find(slack.begin(), slack.end(), "rogers_shephard") != slack.end());

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const auto a = random_assembly(seed, n, seed % 3 == 0 ? AssemblyStyle::unconditional : AssemblyStyle::glued);
    for (int j = 0; j <= n; ++j) {
      const auto r = proof_chain_audit(a, j);
      REQUIRE(r.steps.size() == 5);
      CHECK(r.exact_steps_hold());
      CHECK(r.inequalities_hold());
      CHECK(r.steps.front().lhs == r.mixed);
      CHECK(r.steps.back().rhs == r.bound);
      CHECK(r.mixed == godbersen_check(a, j).mixed);
    }
  }
}

TEST_CASE("random_assembly") {
  for (auto style : {AssemblyStyle::unconditional, AssemblyStyle::glued}) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(random_assembly(11, n, style) == random_assembly(11, n, style));
    }
  }
  CHECK_FALSE(random_assembly(1, 3, AssemblyStyle::glued) == random_assembly(2, 3, AssemblyStyle::glued));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto u = random_assembly(seed, 2 + static_cast<int>(seed % 3), AssemblyStyle::unconditional);
    CHECK(global_hull(u) == negate(global_hull(u)));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const auto g = random_assembly(seed, n, AssemblyStyle::glued);
    CHECK_NOTHROW((void)assemble(n, piece_map(g)));
    for (const auto& s : SignVector::all(n)) CHECK(g.orthant_piece(s).is_full_dimensional());
  }
  CHECK_THROWS_AS(random_assembly(0, 5, AssemblyStyle::glued), std::invalid_argument);
}
