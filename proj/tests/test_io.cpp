#include <random>

#include "corner/io.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace corner;
using namespace corner::testing;

TEST_CASE("polytope JSON literal form") {
  const auto p = hull_of({vec({0, 0}), vec({Q("1/2"), 0}), vec({0, -3})});
  CHECK(polytope_to_json(p).dump() == R"({"dim":2,"vertices":[["0","-3"],["0","0"],["1/2","0"]]})");
  const auto back = polytope_from_json(parse_json(R"({"dim": 2, "vertices": [["1/2", "0"], ["0", "0"], [0, -3], ["2/4", 0]]})"));
  CHECK(back == p);
}

TEST_CASE("polytope JSON round trip is bit-exact") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 4;
    std::vector<Vec> pts;
    for (int k = 0; k < n + 3; ++k) {
      Vec v(n);
      for (auto& x : v) x = Rational(num(rng), den(rng));
      pts.push_back(v);
    }
    const auto p = convex_hull(pts);
    const std::string text = dump(polytope_to_json(p));
    const auto parsed = polytope_from_json(parse_json(text));
    CHECK(parsed == p);
    CHECK(dump(polytope_to_json(parsed)) == text);
  }
}

TEST_CASE("polytope JSON rejects malformed input") {
  for (const char* bad : {R"({"vertices": [["0"]]})", R"({"dim": 1, "vertices": [["0.5"]]})",
                          R"({"dim": 1, "vertices": [["1/0"]]})", R"({"dim": 2, "vertices": [["1"]]})",
                          R"({"dim": 1, "vertices": []})", R"({"dim": 0, "vertices": [[]]})",
                          R"({"dim": 1, "vertices": [[1.5]]})", R"({"dim": "2", "vertices": [["1", "1"]]})"}) {
    CHECK_THROWS_AS(polytope_from_json(parse_json(bad)), ParseError);
  }
  CHECK_THROWS_AS(parse_json("{\"dim\": 1,"), ParseError);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("anti-blocking JSON") {
  const auto k = anti_blocking_from_json(parse_json(R"({"kind": "anti-blocking", "dim": 2, "generators": [["1", "2"]]})"));
  CHECK(k.polytope() == box(std::vector<Rational>{1, 2}));
  const auto j = anti_blocking_to_json(k);
  CHECK(j.at("kind") == "anti-blocking");
  CHECK(anti_blocking_from_json(j) == k);
  CHECK_THROWS_AS(anti_blocking_from_json(parse_json(R"({"dim": 2, "vertices": [["1", "1"], ["0", "0"]]})")), ParseError);
  CHECK_THROWS_AS(anti_blocking_from_json(parse_json(R"({"dim": 1, "generators": [["-1"]]})")), ParseError);
  CHECK_THROWS_AS(anti_blocking_from_json(parse_json(R"({"kind": "polytope", "dim": 1, "vertices": [["0"]]})")),
                  ParseError);
  CHECK_THROWS_AS(
      anti_blocking_from_json(parse_json(R"({"dim": 1, "generators": [["2"]], "vertices": [["0"], ["1"]]})")),
      ParseError);
}

TEST_CASE("assembly JSON round trip") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const auto a = random_assembly(seed, n, seed % 2 ? AssemblyStyle::glued : AssemblyStyle::unconditional);
    const std::string text = dump(assembly_to_json(a));
    const auto back = assembly_from_json(parse_json(text));
    CHECK(back == a);
    CHECK(dump(assembly_to_json(back)) == text);
  }
  const auto tri = assembly_from_json(parse_json(R"({"dim": 2, "pieces": {
      "++": {"dim": 2, "vertices": [["0","0"],["1","0"],["0","1"]]},
      "-+": {"dim": 2, "vertices": [["0","0"],["1","0"],["0","1"]]},
      "+-": {"dim": 2, "generators": [["1","0"]]},
      "--": {"dim": 2, "generators": [["1","0"]]}}})"));
  CHECK(global_hull(tri) == hull_of({vec({1, 0}), vec({-1, 0}), vec({0, 1})}));
}

TEST_CASE("assembly JSON errors") {
  CHECK_THROWS_AS(assembly_from_json(parse_json(R"({"dim": 2, "pieces": {"+": {"dim": 2, "generators": [["0","0"]]}}})")),
                  ParseError);
  CHECK_THROWS_AS(assembly_from_json(parse_json(R"({"dim": 2, "pieces": {"+x": {"dim": 2, "generators": [["0","0"]]}}})")),
                  ParseError);
  CHECK_THROWS_AS(assembly_from_json(parse_json(R"({"dim": 2, "pieces": []})")), ParseError);
  // Valid JSON, invalid body: the simplex piece alone clashes with the empty orthants.
  CHECK_THROWS_AS(
      assembly_from_json(parse_json(R"({"dim": 2, "pieces": {"++": {"dim": 2, "generators": [["1","0"],["0","1"]]}}})")),
      AssemblyError);
}

TEST_CASE("report JSON") {
  const auto a = equality_family(1, std::vector<Rational>{1, 1});
  const auto r = report_to_json(godbersen_check(a, 1));
  CHECK(r.dump() == R"({"j":1,"mixed":"1","bound":"1","ratio":"1","is_equality":true,"trivial":false})");
  const auto audit = audit_to_json(proof_chain_audit(a, 1));
  CHECK(audit.at("steps").size() == 5);
  CHECK(audit.at("exact_steps_hold") == true);
  CHECK(audit.at("slack").empty());
}
