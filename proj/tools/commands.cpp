#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "corner/io.hpp"
#include "corner/mixed_volume.hpp"
#include "corner/simplex_formulas.hpp"

namespace corner::cli {

namespace {

class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Failure : public std::runtime_error {
 public:
  Failure(ExitCode code, const std::string& what) : std::runtime_error(what), code(code) {}
  ExitCode code;
};

struct Config {
  std::uint64_t seed = 0;
  int dim = 2;
  int trials = 10;
  std::string format = "json";
  std::string method = "interpolation";
  bool cross_check = false;
  std::string family = "random";
  std::string style = "unconditional";
  std::string out_file;
  std::optional<int> j;
  std::string alphas;
  std::string betas;
  std::string beta = "1";
  bool approx = false;
  std::vector<std::string> files;
};

// An input body: a plain polytope, or an assembly together with its hull.
struct Body {
  VPolytope hull;
  std::optional<OrthantAssembly> assembly;
};

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_input(const std::string& path) { return parse_json(read_text(path)); }

Body load_body(const std::string& path) {
  const Json j = read_input(path);
  if (j.is_object() && j.contains("pieces")) {
    auto a = assembly_from_json(j);
    return Body{a.hull(), std::move(a)};
  }
  if (j.is_object() && j.contains("generators")) return Body{anti_blocking_from_json(j).polytope(), std::nullopt};
  return Body{polytope_from_json(j), std::nullopt};
}

std::optional<AntiBlockingBody> as_corner(const VPolytope& p) {
  if (!validate_ab(p)) return std::nullopt;
  return AntiBlockingBody::from_polytope(p);
}

// The alphas of p when p = conv(0, alpha_1 e_1, ..., alpha_n e_n).
std::optional<AlignedSimplex> as_aligned_simplex(const VPolytope& p) {
  std::vector<Rational> alphas(p.dim(), Rational(0));
  for (const auto& v : p.vertices()) {
    for (int i = 0; i < p.dim(); ++i) {
      if (v[i] < 0) return std::nullopt;
      alphas[i] = std::max(alphas[i], v[i]);
    }
  }
  if (!(aligned_simplex(alphas) == p)) return std::nullopt;
  return AlignedSimplex(alphas);
}

void check_single_dim(int n) {
  if (n > 6) throw ParseError("dimension " + std::to_string(n) + " exceeds 6 for single computations");
}

void check_sweep_dim(int n) {
  if (n < 1 || n > 4) throw ParseError("--dim must be in [1, 4] for sweeps and random generation");
}

int require_j(const Config& c, int n) {
  if (!c.j) throw ParseError("--j is required");
  if (*c.j < 0 || *c.j > n) throw ParseError("--j must lie in [0, " + std::to_string(n) + "]");
  return *c.j;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
}

std::vector<Rational> random_positive(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> out(n);
  for (auto& x : out) {
    const int p = num(rng);
    x = Rational(p, den(rng));
  }
  return out;
}

std::vector<Rational> alphas_or_ones(const Config& c) {
  if (c.alphas.empty()) return std::vector<Rational>(c.dim, Rational(1));
  return parse_rational_list(c.alphas);
}

// Deterministic body for one member of a named family.
OrthantAssembly family_member(const std::string& family, const std::vector<Rational>& alphas, const Rational& beta) {
  if (family == "equality-1") return equality_family(1, alphas, beta);
  if (family == "equality-2") return equality_family(2, alphas, beta);
  for (const auto& a : alphas) {
    if (a <= 0) throw ParseError("--alphas must be positive");
  }
  if (family == "cube") return from_unconditional(AntiBlockingBody::from_polytope(box(alphas)));
  if (family == "cross-polytope") return from_unconditional(AntiBlockingBody::from_polytope(aligned_simplex(alphas)));
  throw ParseError("unknown family " + family);
}

AssemblyStyle parse_style(const std::string& s) {
  if (s == "unconditional") return AssemblyStyle::unconditional;
  if (s == "glued") return AssemblyStyle::glued;
  throw ParseError("unknown style " + s);
}

std::string vertices_field(const VPolytope& p) {
  std::string s;
  for (const auto& v : p.vertices()) {
    if (!s.empty()) s += ";";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  }
  return s;
}

std::string approx_text(const Rational& x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", approximate(x));
  return buf;
}

// ---- mixvol ---------------------------------------------------------------

Rational mixvol_by(const std::string& method, const Body& k, const Body& t, int j) {
  if (method == "interpolation") return mixed_volume_pair(k.hull, t.hull, j);
  if (method == "decomposition") {
    if (k.assembly && t.assembly) return lab_mixed(*k.assembly, *t.assembly, j);
    const auto kc = as_corner(k.hull);
    const auto tc = as_corner(negate(t.hull));
    if (kc && tc) return ab_opposite_mixed(*kc, *tc, j);
    throw Inapplicable("decomposition needs two assemblies, or K anti-blocking and -T anti-blocking");
  }
  if (method == "closed-form") {
    const auto ks = as_aligned_simplex(k.hull);
    const auto ts = as_aligned_simplex(t.hull);
    if (ks && ts) return corollary_mixed_volume(*ks, *ts, j);
    throw Inapplicable("closed-form needs two coordinate-aligned simplices conv(0, a_i e_i)");
  }
  throw ParseError("unknown method " + method);
}

Json cmd_mixvol(const Config& c, std::ostream& err) {
  if (c.files.size() != 2) throw ParseError("mixvol needs two input files");
  const Body k = load_body(c.files[0]);
  const Body t = load_body(c.files[1]);
  if (k.hull.dim() != t.hull.dim()) throw ParseError("input dimensions differ");
  check_single_dim(k.hull.dim());
  const int j = require_j(c, k.hull.dim());
  if (!c.cross_check) return Json(to_string(mixvol_by(c.method, k, t, j)));

  std::vector<std::pair<std::string, Rational>> values;
  for (const char* m : {"interpolation", "decomposition", "closed-form"}) {
    try {
      values.emplace_back(m, mixvol_by(m, k, t, j));
    } catch (const Inapplicable&) {
    }
  }
  bool agree = true;
  for (const auto& [m, v] : values) agree = agree && v == values.front().second;
  if (!agree) {
    for (const auto& [m, v] : values) err << m << ": " << to_string(v) << "\n";
    throw Failure(kCrossCheck, "mixvol: methods disagree");
  }
  err << "cross-check:";
  for (const auto& [m, v] : values) err << " " << m;
  err << " agree\n";
  return Json(to_string(values.front().second));
}

// ---- godbersen ------------------------------------------------------------

struct SweepInstance {
  OrthantAssembly assembly;
  std::string style;
};

SweepInstance sweep_instance(const Config& c, int trial, std::uint64_t seed) {
  if (c.family == "random") {
    std::string style = c.style;
    if (style == "mixed") style = trial % 2 == 0 ? "unconditional" : "glued";
    return {random_assembly(seed, c.dim, parse_style(style)), style};
  }
  std::mt19937_64 rng(seed);
  const auto alphas = random_positive(rng, c.dim);
  const auto beta = random_positive(rng, 1).front();
  return {family_member(c.family, alphas, beta), ""};
}

struct SweepResult {
  std::string text;
  int violations = 0;
};

SweepResult cmd_godbersen(const Config& c, std::ostream& err) {
  check_sweep_dim(c.dim);
  if (c.trials < 1) throw ParseError("--trials must be positive");
  Json records = Json::array();
  std::ostringstream csv;
  csv << "trial,seed,family,style,dim,j,mixed,bound,ratio,verdict,trivial,instance" << (c.approx ? ",approx_ratio" : "")
      << "\n";
  int violations = 0;
  int equalities = 0;
  int strict = 0;
  std::optional<Rational> min_ratio;
  std::optional<Rational> max_ratio;
  std::vector<int> equality_trials;

  for (int t = 0; t < c.trials; ++t) {
    const std::uint64_t seed = trial_seed(c.seed, t);
    const auto inst = sweep_instance(c, t, seed);
    bool trial_equality = false;
    for (const auto& r : godbersen_check_all(inst.assembly)) {
      std::string verdict = r.ratio > 1 ? "violation" : (r.is_equality ? "equality" : "strict");
      const bool replay = verdict == "violation" || (verdict == "equality" && !r.trivial);
      if (verdict == "violation") ++violations;
      if (!r.trivial) {
        if (verdict == "equality") {
          ++equalities;
          trial_equality = true;
        }
        if (verdict == "strict") ++strict;
        if (!min_ratio || r.ratio < *min_ratio) min_ratio = r.ratio;
        if (!max_ratio || r.ratio > *max_ratio) max_ratio = r.ratio;
      }
      if (c.format == "csv") {
        csv << t << "," << seed << "," << c.family << "," << inst.style << "," << c.dim << "," << r.j << ","
            << to_string(r.mixed) << "," << to_string(r.bound) << "," << to_string(r.ratio) << "," << verdict << ","
            << (r.trivial ? "true" : "false") << "," << (replay ? vertices_field(inst.assembly.hull()) : "");
        if (c.approx) csv << "," << approx_text(r.ratio);
        csv << "\n";
        continue;
      }
      Json rec;
      rec["trial"] = t;
      rec["seed"] = seed;
      rec["family"] = c.family;
      if (!inst.style.empty()) rec["style"] = inst.style;
      rec["dim"] = c.dim;
      rec["j"] = r.j;
      rec["lhs"] = to_string(r.mixed);
      rec["rhs"] = to_string(r.bound);
      rec["ratio"] = to_string(r.ratio);
      if (c.approx) rec["approx_ratio"] = approx_text(r.ratio);
      rec["verdict"] = verdict;
      rec["trivial"] = r.trivial;
      if (replay) rec["instance"] = polytope_to_json(inst.assembly.hull());
      records.push_back(std::move(rec));
    }
    if (trial_equality) equality_trials.push_back(t);
  }

  err << "godbersen: " << c.trials << " trials, " << violations << " violations, " << equalities
      << " nontrivial equalities, " << strict << " strict\n";
  if (c.format == "csv") return {csv.str(), violations};

  Json report;
  report["command"] = "godbersen";
  Json config;
  config["seed"] = c.seed;
  config["dim"] = c.dim;
  config["trials"] = c.trials;
  config["family"] = c.family;
  if (c.family == "random") config["style"] = c.style;
  report["config"] = std::move(config);
  report["records"] = std::move(records);
  Json summary;
  summary["trials"] = c.trials;
  summary["records"] = report["records"].size();
  summary["violations"] = violations;
  summary["equalities"] = equalities;
  summary["strict"] = strict;
  summary["min_ratio"] = min_ratio ? Json(to_string(*min_ratio)) : Json(nullptr);
  summary["max_ratio"] = max_ratio ? Json(to_string(*max_ratio)) : Json(nullptr);
  summary["equality_trials"] = equality_trials;
  report["summary"] = std::move(summary);
  return {dump(report), violations};
}

// ---- audit ----------------------------------------------------------------

int cmd_audit(const Config& c, std::string& text) {
  if (c.files.size() != 1) throw ParseError("audit needs one assembly file");
  const auto a = assembly_from_json(read_input(c.files[0]));
  std::vector<AuditReport> reports;
  if (c.j) {
    reports.push_back(proof_chain_audit(a, require_j(c, a.dim())));
  } else {
    for (int j = 0; j <= a.dim(); ++j) reports.push_back(proof_chain_audit(a, j));
  }
  int code = kOk;
  Json audits = Json::array();
  for (const auto& r : reports) {
    if (!r.exact_steps_hold()) code = kCrossCheck;
    if (code == kOk && !r.inequalities_hold()) code = kViolation;
    audits.push_back(audit_to_json(r));
  }
  if (c.j) {
    text = dump(audits.front());
  } else {
    Json out;
    out["dim"] = a.dim();
    out["audits"] = std::move(audits);
    text = dump(out);
  }
  return code;
}

// ---- gen ------------------------------------------------------------------

Json cmd_gen(const Config& c) {
  if (c.family == "random") {
    check_sweep_dim(c.dim);
    return assembly_to_json(random_assembly(c.seed, c.dim, parse_style(c.style)));
  }
  const auto alphas = alphas_or_ones(c);
  check_single_dim(static_cast<int>(alphas.size()));
  return assembly_to_json(family_member(c.family, alphas, parse_rational(c.beta)));
}

// ---- simplex --------------------------------------------------------------

Json cmd_simplex(const Config& c, std::ostream& err) {
  if (c.alphas.empty()) throw ParseError("--alphas is required");
  const AlignedSimplex k(parse_rational_list(c.alphas));
  check_single_dim(k.dim());
  const int j = require_j(c, k.dim());
  std::optional<AlignedSimplex> t;
  if (!c.betas.empty()) {
    t.emplace(parse_rational_list(c.betas));
    if (t->dim() != k.dim()) throw ParseError("--alphas and --betas differ in length");
  }
  const Rational value = t ? corollary_mixed_volume(k, *t, j) : lemma_mixed_volume(k, j);
  if (c.cross_check) {
    const Rational engine = mixed_volume_pair(k.polytope(), t ? t->polytope() : standard_simplex(k.dim()), j);
    if (engine != value) {
      err << "closed form " << to_string(value) << ", engine " << to_string(engine) << "\n";
      throw Failure(kCrossCheck, "simplex: closed form disagrees with the engine");
    }
    err << "cross-check: closed-form interpolation agree\n";
  }
  return Json(to_string(value));
}

// ---- decompose ------------------------------------------------------------

Json cmd_decompose(const Config& c, std::ostream& err) {
  if (c.files.size() != 2) throw ParseError("decompose needs two input files");
  const auto k = as_corner(load_body(c.files[0]).hull);
  const auto kp = as_corner(load_body(c.files[1]).hull);
  if (!k || !kp) throw Inapplicable("decompose needs two anti-blocking bodies");
  if (k->dim() != kp->dim()) throw ParseError("input dimensions differ");
  const int n = k->dim();
  check_single_dim(n);

  std::vector<int> js;
  if (c.j) {
    js.push_back(require_j(c, n));
  } else {
    for (int j = 0; j <= n; ++j) js.push_back(j);
  }
  const auto minus = negate(kp->polytope());
  Json mixed = Json::array();
  for (int j : js) {
    const Rational v = ab_opposite_mixed(*k, *kp, j);
    if (c.cross_check && v != mixed_volume_pair(k->polytope(), minus, j)) {
      throw Failure(kCrossCheck, "decompose: subspace sum disagrees with interpolation at j=" + std::to_string(j));
    }
    Json entry;
    entry["j"] = j;
    entry["value"] = to_string(v);
    mixed.push_back(std::move(entry));
  }
  const Rational join = ab_join_volume(*k, *kp);
  if (c.cross_check) {
    if (join != volume(join_hull(k->polytope(), minus))) {
      throw Failure(kCrossCheck, "decompose: join volume disagrees with the direct hull");
    }
    err << "cross-check: subspace sums match direct computations\n";
  }
  Json out;
  out["dim"] = n;
  out["opposite_mixed"] = std::move(mixed);
  out["join_volume"] = to_string(join);
  return out;
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_file);
  if (!f) throw ParseError("cannot write " + c.out_file);
  f << text;
}

std::string as_text(const Json& j) { return j.is_string() ? j.get<std::string>() + "\n" : dump(j); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Exact mixed volumes and Godbersen checks for locally anti-blocking bodies", "corner"};
  app.require_subcommand(1);

  auto common = [&c](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("--dim", c.dim, "Ambient dimension");
    sub->add_option("--out", c.out_file, "Write the report to FILE instead of stdout");
  };

  auto* mixvol = app.add_subcommand("mixvol", "V_n(K[j], T[n-j]) of two polytope or assembly files");
  common(mixvol);
  mixvol->add_option("files", c.files, "K.json T.json")->expected(2);
  mixvol->add_option("--j", c.j, "Number of copies of K");
  mixvol->add_option("--method", c.method, "interpolation | decomposition | closed-form")
      ->check(CLI::IsMember({"interpolation", "decomposition", "closed-form"}));
  mixvol->add_flag("--cross-check", c.cross_check, "Run every applicable method and require agreement");

  auto* godbersen = app.add_subcommand("godbersen", "Sweep V_n(K[j],-K[n-j]) <= C(n,j) Vol(K) over random bodies");
  common(godbersen);
  godbersen->add_option("--trials", c.trials, "Number of bodies");
  godbersen->add_option("--family", c.family, "random | equality-1 | equality-2 | cube | cross-polytope")
      ->check(CLI::IsMember({"random", "equality-1", "equality-2", "cube", "cross-polytope"}));
  godbersen->add_option("--style", c.style, "unconditional | glued | mixed (random family)")
      ->check(CLI::IsMember({"unconditional", "glued", "mixed"}));
  godbersen->add_option("--format", c.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  godbersen->add_flag("--approx", c.approx, "Append decimal ratios (not authoritative)");

  auto* audit = app.add_subcommand("audit", "Step-by-step audit of the inequality chain for an assembly file");
  common(audit);
  audit->add_option("file", c.files, "Assembly JSON, or - for stdin")->expected(1);
  audit->add_option("--j", c.j, "Single j (default: all)");

  auto* gen = app.add_subcommand("gen", "Emit an assembly as JSON");
  common(gen);
  gen->add_option("--family", c.family, "random | equality-1 | equality-2 | cube | cross-polytope")
      ->check(CLI::IsMember({"random", "equality-1", "equality-2", "cube", "cross-polytope"}));
  gen->add_option("--style", c.style, "unconditional | glued (random family)")
      ->check(CLI::IsMember({"unconditional", "glued"}));
  gen->add_option("--alphas", c.alphas, "Comma-separated exact rationals");
  gen->add_option("--beta", c.beta, "beta_1 for equality-2");

  auto* simplex = app.add_subcommand("simplex", "Closed-form mixed volumes of coordinate-aligned simplices");
  common(simplex);
  simplex->add_option("--alphas", c.alphas, "K = conv(0, a_i e_i)");
  simplex->add_option("--betas", c.betas, "T = conv(0, b_i e_i); default T is the standard simplex");
  simplex->add_option("--j", c.j, "Number of copies of K");
  simplex->add_flag("--cross-check", c.cross_check, "Compare with the interpolation engine");

  auto* decompose = app.add_subcommand("decompose", "Subspace sums for V_n(K[j],-K'[n-j]) and Vol(K v -K')");
  common(decompose);
  decompose->add_option("files", c.files, "K.json K'.json (anti-blocking)")->expected(2);
  decompose->add_option("--j", c.j, "Single j (default: all)");
  decompose->add_flag("--cross-check", c.cross_check, "Compare with direct computations");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (mixvol->parsed()) {
      emit(c, as_text(cmd_mixvol(c, err)), out);
    } else if (godbersen->parsed()) {
      const auto r = cmd_godbersen(c, err);
      emit(c, r.text, out);
      return r.violations > 0 ? kViolation : kOk;
    } else if (audit->parsed()) {
      std::string text;
      const int code = cmd_audit(c, text);
      emit(c, text, out);
      return code;
    } else if (gen->parsed()) {
      emit(c, dump(cmd_gen(c)), out);
    } else if (simplex->parsed()) {
      emit(c, as_text(cmd_simplex(c, err)), out);
    } else if (decompose->parsed()) {
      emit(c, dump(cmd_decompose(c, err)), out);
    }
  } catch (const Failure& e) {
    err << "error: " << e.what() << "\n";
    return e.code;
  } catch (const CrossCheckError& e) {
    err << "cross-check failure: " << e.what() << "\n";
    return kCrossCheck;
  } catch (const Inapplicable& e) {
    err << "inapplicable: " << e.what() << "\n";
    return kInapplicable;
  } catch (const AssemblyError& e) {
    err << "invalid assembly: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

}  // namespace corner::cli
