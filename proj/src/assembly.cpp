#include "corner/assembly.hpp"

#include <bit>
#include <random>

#include "corner/mixed_volume.hpp"

namespace corner {

namespace {

std::uint64_t full_mask(int n) { return CoordSubspace::whole(n).mask(); }

void check_j(int j, int n) {
  if (j < 0 || j > n) {
    throw std::out_of_range("j=" + std::to_string(j) + " outside [0, " + std::to_string(n) + "]");
  }
}

std::string subspace_str(const CoordSubspace& e) {
  std::string s = "{";
  for (int i : e.indices()) {
    if (s.size() > 1) s += ",";
    s += std::to_string(i + 1);
  }
  return s + "}";
}

// rep[m] is the smallest index whose piece equals piece m.
std::vector<std::size_t> representatives(const std::vector<AntiBlockingBody>& pieces) {
  std::vector<std::size_t> rep(pieces.size());
  for (std::size_t m = 0; m < pieces.size(); ++m) {
    rep[m] = m;
    for (std::size_t r = 0; r < m; ++r) {
      if (rep[r] == r && pieces[r] == pieces[m]) {
        rep[m] = r;
        break;
      }
    }
  }
  return rep;
}

// Coordinates that are nonzero somewhere in some piece.
std::uint64_t used_coordinates(const std::vector<AntiBlockingBody>& pieces) {
  std::uint64_t used = 0;
  for (const auto& p : pieces) {
    for (const auto& v : p.polytope().vertices()) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) used |= std::uint64_t{1} << i;
      }
    }
  }
  return used;
}

void check_consistency(int n, const std::vector<AntiBlockingBody>& pieces) {
  const std::uint64_t full = full_mask(n);
  for (std::uint64_t s = 0; s <= full; ++s) {
    for (std::uint64_t t = s + 1; t <= full; ++t) {
      const std::uint64_t agree = ~(s ^ t) & full;
      if (agree == 0 || pieces[s] == pieces[t]) continue;
      const CoordSubspace e(n, agree);
      if (!(project(pieces[s].polytope(), e) == project(pieces[t].polytope(), e))) {
        throw AssemblyError(SignVector(n, s), SignVector(n, t), e);
      }
    }
  }
}

// The union of pieces lying in distinct orthants of the used coordinates is
// convex iff its hull has the same volume there; the hull is full-dimensional
// in those coordinates because every piece contains its axis segments.
std::optional<VPolytope> convex_union_hull(int n, const std::vector<AntiBlockingBody>& pieces) {
  const std::uint64_t used = used_coordinates(pieces);
  std::vector<Vec> points;
  Rational piece_sum = 0;
  const CoordSubspace u(n, used);
  for (std::uint64_t s = 0; s < pieces.size(); ++s) {
    if ((s & ~used) != 0) continue;
    const auto reflected = reflect(pieces[s].polytope(), SignVector(n, s));
    points.insert(points.end(), reflected.vertices().begin(), reflected.vertices().end());
    piece_sum += relative_volume(pieces[s].polytope(), u);
  }
  auto hull = convex_hull(points);
  if (used != 0 && relative_volume(hull, u) != piece_sum) return std::nullopt;
  return hull;
}

std::vector<AntiBlockingBody> complete_pieces(int n, const std::map<SignVector, AntiBlockingBody>& pieces) {
  if (n < 1 || n > max_dimension()) {
    throw AssemblyError(AssemblyError::Kind::dimension, "assemble: dimension " + std::to_string(n) + " out of range");
  }
  const auto zero = ab_hull(std::vector<Vec>{Vec(n, Rational(0))});
  std::vector<AntiBlockingBody> all(std::size_t{1} << n, zero);
  for (const auto& [sigma, body] : pieces) {
    if (sigma.dim() != n || body.dim() != n) {
      throw AssemblyError(AssemblyError::Kind::dimension, "assemble: piece " + sigma.str() + " has wrong dimension");
    }
    all[sigma.negative_mask()] = body;
  }
  return all;
}

// out[j] = sum_s V_n(A_s[j], B_s[n-j]), one interpolation per distinct pair.
std::vector<Rational> orthant_mixed_values(const OrthantAssembly& a, const OrthantAssembly& b) {
  const int n = a.dim();
  const auto rep_a = representatives(a.pieces());
  const auto rep_b = representatives(b.pieces());
  std::map<std::pair<std::size_t, std::size_t>, VolumePolynomial> cache;
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::size_t s = 0; s < a.pieces().size(); ++s) {
    const auto key = std::make_pair(rep_a[s], rep_b[s]);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, volume_polynomial(a.pieces()[s].polytope(), b.pieces()[s].polytope())).first;
    }
    for (int j = 0; j <= n; ++j) out[j] += it->second.mixed(j);
  }
  return out;
}

// out[j] = sum_s V_n(P_s[j], P_-s[n-j]) using V(P[j],Q[n-j]) = V(Q[n-j],P[j]).
std::vector<Rational> opposite_orthant_values(const OrthantAssembly& a) {
  const int n = a.dim();
  const std::uint64_t full = full_mask(n);
  const auto rep = representatives(a.pieces());
  std::map<std::pair<std::size_t, std::size_t>, VolumePolynomial> cache;
  std::vector<Rational> out(n + 1, Rational(0));
  for (std::uint64_t s = 0; s <= full; ++s) {
    const std::size_t p = rep[s];
    const std::size_t q = rep[s ^ full];
    if (auto it = cache.find({q, p}); it != cache.end()) {
      for (int j = 0; j <= n; ++j) out[j] += it->second.mixed(n - j);
      continue;
    }
    auto it = cache.find({p, q});
    if (it == cache.end()) {
      it = cache.emplace(std::make_pair(p, q), volume_polynomial(a.pieces()[s].polytope(), a.pieces()[s ^ full].polytope()))
               .first;
    }
    for (int j = 0; j <= n; ++j) out[j] += it->second.mixed(j);
  }
  return out;
}

void require_full_dimensional(const OrthantAssembly& a, const char* who) {
  if (!a.hull().is_full_dimensional()) {
    throw std::invalid_argument(std::string(who) + ": body is not full-dimensional");
  }
}

GodbersenReport make_report(int n, int j, Rational mixed, const Rational& volume) {
  GodbersenReport r{j, std::move(mixed), Rational(binomial(n, j)) * volume, 0, false, j == 0 || j == n};
  r.ratio = r.mixed / r.bound;
  r.is_equality = r.mixed == r.bound;
  return r;
}

std::string cross_check_message(const std::string& what, const Rational& x, const Rational& y) {
  return what + ": orthant sum " + to_string(x) + " != direct " + to_string(y);
}

}  // namespace

AssemblyError::AssemblyError(const SignVector& sigma, const SignVector& tau, const CoordSubspace& e)
    : std::invalid_argument("pieces " + sigma.str() + " and " + tau.str() + " have different projections onto E=" +
                            subspace_str(e)),
      kind_(Kind::consistency),
      sigma_(sigma),
      tau_(tau),
      e_(e) {}

VPolytope OrthantAssembly::orthant_piece(const SignVector& sigma) const {
  return reflect(piece(sigma).polytope(), sigma);
}

OrthantAssembly assemble(int n, const std::map<SignVector, AntiBlockingBody>& pieces) {
  auto all = complete_pieces(n, pieces);
  check_consistency(n, all);
  auto hull = convex_union_hull(n, all);
  if (!hull) throw AssemblyError(AssemblyError::Kind::non_convex, "union of orthant pieces is not convex");
  return OrthantAssembly(n, std::move(all), std::move(*hull));
}

bool orthant_union_is_convex(int n, const std::map<SignVector, AntiBlockingBody>& pieces) {
  return convex_union_hull(n, complete_pieces(n, pieces)).has_value();
}

OrthantAssembly from_unconditional(const AntiBlockingBody& k_plus) {
  std::map<SignVector, AntiBlockingBody> pieces;
  for (const auto& sigma : SignVector::all(k_plus.dim())) pieces.emplace(sigma, k_plus);
  return assemble(k_plus.dim(), pieces);
}

OrthantAssembly equality_family(int family_case, std::span<const Rational> alphas, const Rational& beta1) {
  if (family_case != 1 && family_case != 2) throw std::invalid_argument("equality_family: case must be 1 or 2");
  const int n = static_cast<int>(alphas.size());
  if (n < 1) throw std::invalid_argument("equality_family: empty alphas");
  for (const auto& a : alphas) {
    if (a <= 0) throw std::invalid_argument("equality_family: alphas must be positive");
  }
  if (family_case == 2 && beta1 <= 0) throw std::invalid_argument("equality_family: beta must be positive");

  // K n sigma R^n_+ keeps the vertices lying in the closed orthant.
  std::map<SignVector, AntiBlockingBody> pieces;
  for (const auto& sigma : SignVector::all(n)) {
    std::vector<Rational> sides(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      if (sigma[i] > 0) sides[i] = alphas[i];
    }
    if (family_case == 2 && sigma[0] < 0) sides[0] = beta1;
    pieces.emplace(sigma, AntiBlockingBody::from_polytope(aligned_simplex(sides)));
  }
  return assemble(n, pieces);
}

Rational lab_volume(const OrthantAssembly& a) {
  Rational sum = 0;
  for (const auto& p : a.pieces()) sum += p.polytope().volume();
  return sum;
}

Rational lab_mixed(const OrthantAssembly& a, const OrthantAssembly& b, int j) {
  if (a.dim() != b.dim()) throw std::invalid_argument("lab_mixed: dimension mismatch");
  check_j(j, a.dim());
  return orthant_mixed_values(a, b)[j];
}

OrthantAssembly negate_assembly(const OrthantAssembly& a) {
  const std::uint64_t full = full_mask(a.dim());
  std::vector<AntiBlockingBody> pieces;
  pieces.reserve(a.pieces().size());
  for (std::uint64_t s = 0; s <= full; ++s) pieces.push_back(a.pieces()[s ^ full]);
  return OrthantAssembly(a.dim(), std::move(pieces), negate(a.hull()));
}

VPolytope global_hull(const OrthantAssembly& a) { return a.hull(); }

GodbersenReport godbersen_check(const OrthantAssembly& a, int j) {
  check_j(j, a.dim());
  require_full_dimensional(a, "godbersen_check");
  const Rational orthant = lab_mixed(a, negate_assembly(a), j);
  const Rational direct = mixed_volume_pair(a.hull(), negate(a.hull()), j);
  if (orthant != direct) throw CrossCheckError(cross_check_message("V(K[j],-K[n-j])", orthant, direct));
  const Rational vol = lab_volume(a);
  if (vol != a.hull().volume()) throw CrossCheckError(cross_check_message("Vol(K)", vol, a.hull().volume()));
  return make_report(a.dim(), j, orthant, vol);
}

std::vector<GodbersenReport> godbersen_check_all(const OrthantAssembly& a) {
  require_full_dimensional(a, "godbersen_check_all");
  const int n = a.dim();
  const auto orthant = opposite_orthant_values(a);
  const auto direct = volume_polynomial(a.hull(), negate(a.hull()));
  const Rational vol = lab_volume(a);
  if (vol != a.hull().volume()) throw CrossCheckError(cross_check_message("Vol(K)", vol, a.hull().volume()));
  std::vector<GodbersenReport> out;
  for (int j = 0; j <= n; ++j) {
    if (orthant[j] != direct.mixed(j)) {
      throw CrossCheckError(cross_check_message("V(K[" + std::to_string(j) + "],-K[n-j])", orthant[j], direct.mixed(j)));
    }
    out.push_back(make_report(n, j, orthant[j], vol));
  }
  return out;
}

bool AuditReport::exact_steps_hold() const {
  for (const auto& s : steps) {
    if (s.relation == "=" && !s.holds) return false;
  }
  return true;
}

bool AuditReport::inequalities_hold() const {
  for (const auto& s : steps) {
    if (s.relation == "<=" && !s.holds) return false;
  }
  return true;
}

std::vector<std::string> AuditReport::slack_steps() const {
  std::vector<std::string> out;
  for (const auto& s : steps) {
    if (s.relation == "<=" && s.lhs < s.rhs) out.push_back(s.name);
  }
  return out;
}

AuditReport proof_chain_audit(const OrthantAssembly& a, int j) {
  const int n = a.dim();
  check_j(j, n);
  require_full_dimensional(a, "proof_chain_audit");
  const std::uint64_t full = full_mask(n);
  const auto& pieces = a.pieces();

  auto step = [](std::string name, std::string relation, Rational lhs, Rational rhs) {
    const bool tight = lhs == rhs;
    const bool holds = relation == "=" ? tight : lhs <= rhs;
    return AuditStep{std::move(name), std::move(relation), std::move(lhs), std::move(rhs), holds, tight};
  };

  AuditReport report{n, j, 0, 0, 0, {}};
  report.mixed = mixed_volume_pair(a.hull(), negate(a.hull()), j);
  const Rational vol = lab_volume(a);
  report.bound = Rational(binomial(n, j)) * vol;
  report.ratio = report.mixed / report.bound;

  // V(K_s[j], -K_-s[n-j]); both bodies lie in the orthant s, reflect to R^n_+.
  const Rational split = opposite_orthant_values(a)[j];
  report.steps.push_back(step("orthant_split", "=", report.mixed, split));

  Rational kleitman = 0;
  const auto rep = representatives(pieces);
  std::map<std::pair<std::size_t, std::size_t>, Rational> seen;
  for (std::uint64_t s = 0; s <= full; ++s) {
    const auto key = std::make_pair(rep[s], rep[s ^ full]);
    auto it = seen.find(key);
    if (it == seen.end()) {
      it = seen.emplace(key, mixed_volume_pair(pieces[s].polytope(), negate(pieces[s ^ full].polytope()), j)).first;
    }
    kleitman += it->second;
  }
  report.steps.push_back(step("reverse_kleitman", "<=", split, kleitman));

  // proj[s][E] = Vol_|E|(P_E K_s), measured in E.
  std::vector<std::vector<Rational>> proj(pieces.size(), std::vector<Rational>(full + 1));
  for (std::uint64_t s = 0; s <= full; ++s) {
    if (rep[s] != s) {
      proj[s] = proj[rep[s]];
      continue;
    }
    for (std::uint64_t e = 0; e <= full; ++e) {
      const CoordSubspace sub(n, e);
      proj[s][e] = relative_volume(project(pieces[s].polytope(), sub), sub);
    }
  }

  const Rational scale = Rational(binomial(n, j));
  Rational formula = 0;
  for (std::uint64_t s = 0; s <= full; ++s) formula += ab_opposite_mixed(pieces[s], pieces[s ^ full], j);
  report.steps.push_back(step("opposite_orthant_formula", "=", kleitman, formula));

  Rational by_sigma = 0;
  Rational by_tau = 0;
  for (const auto& e : CoordSubspace::all_of_size(n, j)) {
    const std::uint64_t em = e.mask();
    const std::uint64_t perp = e.complement().mask();
    for (std::uint64_t s = 0; s <= full; ++s) {
      by_sigma += proj[s][em] * proj[s ^ full][perp];
      by_tau += proj[s][em] * proj[s][perp];
      // tau agrees with sigma on E and with -sigma on E^perp.
      const std::uint64_t t = (s & em) | ((s ^ full) & perp);
      if (!(project(pieces[s].polytope(), e) == project(pieces[t].polytope(), e)) ||
          !(project(pieces[s ^ full].polytope(), e.complement()) ==
            project(pieces[t].polytope(), e.complement()))) {
        throw CrossCheckError("re-indexing: projections of " + SignVector(n, s).str() + " and " +
                              SignVector(n, t).str() + " differ for E=" + subspace_str(e));
      }
    }
  }
  by_sigma /= scale;
  by_tau /= scale;
  if (by_sigma != formula) throw CrossCheckError(cross_check_message("subspace expansion", by_sigma, formula));
  report.steps.push_back(step("bijection_reindex", "=", by_sigma, by_tau));
  report.steps.push_back(step("rogers_shephard", "<=", by_tau, report.bound));
  return report;
}

namespace {

constexpr int kGluedMaxCoord = 4;
constexpr int kGluedAttempts = 20;

std::mt19937_64 face_rng(std::uint64_t seed, int n, int attempt, std::uint64_t face, std::uint64_t signs) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n),    static_cast<std::uint32_t>(attempt),
                    static_cast<std::uint32_t>(face), static_cast<std::uint32_t>(signs)};
  return std::mt19937_64(seq);
}

// Builds one face per (I, signs on I), lower faces first, so that dropping a
// coordinate i from face (I, s) gives face (I \ {i}, s). The pieces are the
// faces with I = [n].
OrthantAssembly glued_attempt(std::uint64_t seed, int n, int attempt) {
  const std::uint64_t full = full_mask(n);
  std::map<std::pair<std::uint64_t, std::uint64_t>, AntiBlockingBody> faces;
  faces.emplace(std::make_pair(std::uint64_t{0}, std::uint64_t{0}), ab_hull(std::vector<Vec>{Vec(n, Rational(0))}));
  std::uniform_int_distribution<int> coord(0, kGluedMaxCoord);
  std::uniform_int_distribution<int> axis(1, kGluedMaxCoord);
  std::uniform_int_distribution<int> extra_count(1, 2);

  for (int k = 1; k <= n; ++k) {
    for (const auto& sub : CoordSubspace::all_of_size(n, k)) {
      const std::uint64_t face = sub.mask();
      const auto idx = sub.indices();
      for (std::uint64_t s = face;; s = (s - 1) & face) {
        auto rng = face_rng(seed, n, attempt, face, s);
        std::vector<Vec> gens;
        if (k == 1) {
          Vec g(n, Rational(0));
          g[idx[0]] = axis(rng);
          gens.push_back(std::move(g));
        } else {
          for (int i : idx) {
            const auto bit = std::uint64_t{1} << i;
            const auto& lower = faces.at({face & ~bit, s & ~bit}).polytope().vertices();
            gens.insert(gens.end(), lower.begin(), lower.end());
          }
          const int extras = extra_count(rng);
          for (int e = 0; e < extras; ++e) {
            Vec g(n, Rational(0));
            for (int i : idx) g[i] = coord(rng);
            for (int halvings = 0; halvings < 64; ++halvings) {
              bool inside = true;
              for (int i : idx) {
                const auto bit = std::uint64_t{1} << i;
                Vec dropped = g;
                dropped[i] = 0;
                if (!member(faces.at({face & ~bit, s & ~bit}).polytope(), dropped)) {
                  inside = false;
                  break;
                }
              }
              if (inside) {
                gens.push_back(g);
                break;
              }
              for (auto& x : g) x /= 2;
            }
          }
        }
        faces.emplace(std::make_pair(face, s), ab_hull(gens));
        if (s == 0) break;
      }
    }
  }

  std::map<SignVector, AntiBlockingBody> pieces;
  for (std::uint64_t s = 0; s <= full; ++s) pieces.emplace(SignVector(n, s), faces.at({full, s}));
  return assemble(n, pieces);
}

}  // namespace

OrthantAssembly random_assembly(std::uint64_t seed, int n, AssemblyStyle style) {
  if (n < 1 || n > 4) throw std::invalid_argument("random_assembly: n must be in [1, 4]");
  if (style == AssemblyStyle::unconditional) {
    auto rng = face_rng(seed, n, -1, 0, 0);
    return from_unconditional(random_anti_blocking(rng, n));
  }
  for (int attempt = 0; attempt < kGluedAttempts; ++attempt) {
    try {
      return glued_attempt(seed, n, attempt);
    } catch (const AssemblyError&) {
    }
  }
  throw std::runtime_error("random_assembly: glued generation failed for seed " + std::to_string(seed));
}

}  // namespace corner
