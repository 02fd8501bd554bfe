#include "corner/io.hpp"

#include <fstream>
#include <sstream>

namespace corner {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int read_dim(const Json& j) {
  const auto& d = field(j, "dim");
  if (!d.is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const int n = d.get<int>();
  if (n < 1 || n > max_dimension()) throw ParseError("\"dim\" out of range: " + std::to_string(n));
  return n;
}

Rational read_rational(const Json& x) {
  try {
    if (x.is_string()) return parse_rational(x.get<std::string>());
    if (x.is_number_integer()) return Rational(x.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("coordinates must be exact rational strings such as \"-1/2\"");
}

std::vector<Vec> read_points(const Json& list, int n, const char* what) {
  if (!list.is_array() || list.empty()) throw ParseError(std::string("\"") + what + "\" must be a nonempty array");
  std::vector<Vec> points;
  for (const auto& row : list) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw ParseError(std::string("each entry of \"") + what + "\" needs " + std::to_string(n) + " coordinates");
    }
    Vec v;
    for (const auto& x : row) v.push_back(read_rational(x));
    points.push_back(std::move(v));
  }
  return points;
}

Json vertices_json(const VPolytope& p) {
  Json out = Json::array();
  for (const auto& v : p.vertices()) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(to_string(x));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json polytope_to_json(const VPolytope& p) {
  Json j;
  j["dim"] = p.dim();
  j["vertices"] = vertices_json(p);
  return j;
}

VPolytope polytope_from_json(const Json& j) {
  const int n = read_dim(j);
  return convex_hull(read_points(field(j, "vertices"), n, "vertices"));
}

Json anti_blocking_to_json(const AntiBlockingBody& k) {
  Json j;
  j["kind"] = "anti-blocking";
  j["dim"] = k.dim();
  j["vertices"] = vertices_json(k.polytope());
  return j;
}

AntiBlockingBody anti_blocking_from_json(const Json& j) {
  if (j.is_object() && j.contains("kind") && j.at("kind") != "anti-blocking") {
    throw ParseError("expected \"kind\": \"anti-blocking\"");
  }
  const int n = read_dim(j);
  if (j.contains("generators")) {
    const auto gens = read_points(j.at("generators"), n, "generators");
    try {
      auto k = ab_hull(gens);
      if (j.contains("vertices") && !(polytope_from_json(j) == k.polytope())) {
        throw ParseError("\"vertices\" disagree with the down-closure of \"generators\"");
      }
      return k;
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  try {
    return AntiBlockingBody::from_polytope(polytope_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json assembly_to_json(const OrthantAssembly& a) {
  Json j;
  j["dim"] = a.dim();
  Json pieces = Json::object();
  for (const auto& s : SignVector::all(a.dim())) pieces[s.str()] = anti_blocking_to_json(a.piece(s));
  j["pieces"] = std::move(pieces);
  return j;
}

OrthantAssembly assembly_from_json(const Json& j) {
  const int n = read_dim(j);
  const auto& pieces = field(j, "pieces");
  if (!pieces.is_object()) throw ParseError("\"pieces\" must be an object keyed by sign strings");
  std::map<SignVector, AntiBlockingBody> map;
  for (const auto& [key, value] : pieces.items()) {
    SignVector s = SignVector::positive(n);
    try {
      s = SignVector::parse(key);
    } catch (const std::invalid_argument&) {
      throw ParseError("bad sign string \"" + key + "\"");
    }
    if (s.dim() != n) throw ParseError("sign string \"" + key + "\" has wrong length");
    if (map.contains(s)) throw ParseError("duplicate piece \"" + key + "\"");
    auto body = anti_blocking_from_json(value);
    if (body.dim() != n) throw ParseError("piece \"" + key + "\" has wrong dimension");
    map.emplace(s, std::move(body));
  }
  return assemble(n, map);
}

Json report_to_json(const GodbersenReport& r) {
  Json j;
  j["j"] = r.j;
  j["mixed"] = to_string(r.mixed);
  j["bound"] = to_string(r.bound);
  j["ratio"] = to_string(r.ratio);
  j["is_equality"] = r.is_equality;
  j["trivial"] = r.trivial;
  return j;
}

Json audit_to_json(const AuditReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["j"] = r.j;
  j["mixed"] = to_string(r.mixed);
  j["bound"] = to_string(r.bound);
  j["ratio"] = to_string(r.ratio);
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json step;
    step["name"] = s.name;
    step["relation"] = s.relation;
    step["lhs"] = to_string(s.lhs);
    step["rhs"] = to_string(s.rhs);
    step["holds"] = s.holds;
    step["tight"] = s.tight;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["exact_steps_hold"] = r.exact_steps_hold();
  j["inequalities_hold"] = r.inequalities_hold();
  j["slack"] = r.slack_steps();
  return j;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace corner
