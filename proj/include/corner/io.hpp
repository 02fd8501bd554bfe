#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "corner/assembly.hpp"

namespace corner {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"dim": n, "vertices": [["num/den", ...], ...]}
Json polytope_to_json(const VPolytope& p);
VPolytope polytope_from_json(const Json& j);

/// Polytope schema tagged "kind": "anti-blocking". On input an optional
/// "generators" list is down-closed; otherwise "vertices" must already be a corner.
Json anti_blocking_to_json(const AntiBlockingBody& k);
AntiBlockingBody anti_blocking_from_json(const Json& j);

/// {"dim": n, "pieces": {"+-": {...}, ...}}. All 2^n pieces are written;
/// on input missing pieces are {0} and the result is validated.
Json assembly_to_json(const OrthantAssembly& a);
OrthantAssembly assembly_from_json(const Json& j);

Json report_to_json(const GodbersenReport& r);
Json audit_to_json(const AuditReport& r);

/// Parses JSON text; syntax errors become ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace corner
