#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corner/anti_blocking.hpp"

namespace corner {

/// A locally anti-blocking body K given by its orthant pieces. The piece for
/// sigma is stored in positive-orthant coordinates; the geometric piece is
/// K_sigma = reflect(piece(sigma), sigma).
class OrthantAssembly {
 public:
  int dim() const { return dim_; }
  const AntiBlockingBody& piece(const SignVector& sigma) const { return pieces_.at(sigma.negative_mask()); }
  /// K_sigma in its own orthant.
  VPolytope orthant_piece(const SignVector& sigma) const;
  /// Pieces indexed by the negative mask of their sign vector.
  const std::vector<AntiBlockingBody>& pieces() const { return pieces_; }
  /// conv of all K_sigma; equal to their union for a valid assembly.
  const VPolytope& hull() const { return hull_; }
  bool operator==(const OrthantAssembly& o) const { return dim_ == o.dim_ && pieces_ == o.pieces_; }

 private:
  OrthantAssembly(int dim, std::vector<AntiBlockingBody> pieces, VPolytope hull)
      : dim_(dim), pieces_(std::move(pieces)), hull_(std::move(hull)) {}
  friend OrthantAssembly assemble(int n, const std::map<SignVector, AntiBlockingBody>& pieces);
  friend OrthantAssembly negate_assembly(const OrthantAssembly& a);

  int dim_;
  std::vector<AntiBlockingBody> pieces_;
  VPolytope hull_;
};

class AssemblyError : public std::invalid_argument {
 public:
  enum class Kind { dimension, consistency, non_convex };

  AssemblyError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  AssemblyError(const SignVector& sigma, const SignVector& tau, const CoordSubspace& e);

  Kind kind() const { return kind_; }
  /// The offending sigma, tau and E for a consistency violation.
  const std::optional<SignVector>& sigma() const { return sigma_; }
  const std::optional<SignVector>& tau() const { return tau_; }
  const std::optional<CoordSubspace>& subspace() const { return e_; }

 private:
  Kind kind_;
  std::optional<SignVector> sigma_;
  std::optional<SignVector> tau_;
  std::optional<CoordSubspace> e_;
};

/// Two computation paths that must agree did not.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Validates projection consistency and convexity of the union. Pieces
/// missing from the map are the body {0}.
OrthantAssembly assemble(int n, const std::map<SignVector, AntiBlockingBody>& pieces);
/// True iff the union of the reflected pieces is convex. Does not check
/// projection consistency; pieces missing from the map are {0}.
bool orthant_union_is_convex(int n, const std::map<SignVector, AntiBlockingBody>& pieces);
OrthantAssembly from_unconditional(const AntiBlockingBody& k_plus);

/// case 1: conv(0, alpha_1 e_1, ..., alpha_n e_n).
/// case 2: conv(alpha_1 e_1, -beta_1 e_1, alpha_2 e_2, ..., alpha_n e_n).
OrthantAssembly equality_family(int family_case, std::span<const Rational> alphas, const Rational& beta1 = 1);

/// sum_sigma Vol(K_sigma).
Rational lab_volume(const OrthantAssembly& a);
/// sum_sigma V_n(A_sigma[j], B_sigma[n-j]).
Rational lab_mixed(const OrthantAssembly& a, const OrthantAssembly& b, int j);
/// Piece at sigma of -A is the piece of A at -sigma.
OrthantAssembly negate_assembly(const OrthantAssembly& a);
VPolytope global_hull(const OrthantAssembly& a);

struct GodbersenReport {
  int j;
  Rational mixed;  // V_n(K[j], -K[n-j])
  Rational bound;  // C(n,j) Vol(K)
  Rational ratio;
  bool is_equality;
  bool trivial;  // j in {0, n}
};

/// Computes V_n(K[j], -K[n-j]) orthant-wise and on the global hull; throws
/// CrossCheckError if they differ. Requires a full-dimensional body.
GodbersenReport godbersen_check(const OrthantAssembly& a, int j);
/// godbersen_check for j = 0..n, sharing one interpolation per path.
std::vector<GodbersenReport> godbersen_check_all(const OrthantAssembly& a);

struct AuditStep {
  std::string name;
  std::string relation;  // "=" or "<="
  Rational lhs;
  Rational rhs;
  bool holds;
  bool tight;  // lhs == rhs
};

struct AuditReport {
  int dim;
  int j;
  Rational mixed;
  Rational bound;
  Rational ratio;
  std::vector<AuditStep> steps;

  bool exact_steps_hold() const;
  bool inequalities_hold() const;
  /// Names of the inequality steps with lhs < rhs.
  std::vector<std::string> slack_steps() const;
};

/// Recomputes the inequality chain
///   V(K[j],-K[n-j]) = sum_s V(K_s[j], -K_-s[n-j])
///                  <= sum_s V(K_s[j], K_-s[n-j])
///                   = C(n,j)^-1 sum_s sum_E Vol_j(P_E K_s) Vol_{n-j}(P_E^perp K_-s)
///                   = C(n,j)^-1 sum_E sum_t Vol_j(P_E K_t) Vol_{n-j}(P_E^perp K_t)
///                  <= C(n,j) Vol(K)
/// and records each step. Throws CrossCheckError if a re-indexed projection
/// pair is not equal as polytopes.
AuditReport proof_chain_audit(const OrthantAssembly& a, int j);

enum class AssemblyStyle { unconditional, glued };

/// Deterministic in (seed, n, style). Glued assemblies have every piece
/// full-dimensional.
OrthantAssembly random_assembly(std::uint64_t seed, int n, AssemblyStyle style);

}  // namespace corner
