#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corner/linalg.hpp"
#include "corner/rational.hpp"

namespace corner {

/// Largest ambient dimension accepted by VPolytope. Defaults to 8; the
/// CORNER_MIXVOL_MAX_DIM environment variable overrides it (at your own risk:
/// hull and subspace sums grow exponentially in the dimension).
int max_dimension();

/// A coordinate subspace E = sp{e_i : i in I} of R^n. Indices are 0-based.
class CoordSubspace {
 public:
  CoordSubspace(int ambient_dim, std::uint64_t index_mask);
  static CoordSubspace from_indices(int ambient_dim, std::span<const int> indices);
  static CoordSubspace whole(int ambient_dim);

  int ambient_dim() const { return ambient_dim_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(int i) const { return (mask_ >> i) & 1U; }
  int size() const;
  std::vector<int> indices() const;
  CoordSubspace complement() const;

  /// All subspaces with exactly k indices, in increasing mask order.
  static std::vector<CoordSubspace> all_of_size(int ambient_dim, int k);

  bool operator==(const CoordSubspace&) const = default;

 private:
  int ambient_dim_;
  std::uint64_t mask_;
};

/// An orthant sign vector in {-1, 1}^n. Bit i of the mask set means sigma_i = -1.
class SignVector {
 public:
  SignVector(int dim, std::uint64_t negative_mask);
  static SignVector positive(int dim) { return SignVector(dim, 0); }
  static SignVector negative(int dim);
  /// Parses a string such as "+-+" (character i is the sign of coordinate i).
  static SignVector parse(std::string_view text);
  static std::vector<SignVector> all(int dim);

  int dim() const { return dim_; }
  std::uint64_t negative_mask() const { return mask_; }
  int operator[](int i) const { return ((mask_ >> i) & 1U) ? -1 : 1; }
  SignVector negated() const;
  /// True when sigma and other agree on every index of e.
  bool agrees_on(const SignVector& other, const CoordSubspace& e) const;
  std::string str() const;

  bool operator==(const SignVector&) const = default;
  auto operator<=>(const SignVector& o) const { return mask_ <=> o.mask_; }

 private:
  int dim_;
  std::uint64_t mask_;
};

/// A polytope given by its irredundant vertex list, sorted lexicographically.
/// Immutable; two polytopes compare equal iff they are the same point set.
class VPolytope {
 public:
  int dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  /// Dimension of the affine hull.
  int affine_dim() const { return affine_dim_; }
  bool is_full_dimensional() const { return affine_dim_ == dim_; }
  /// Exact n-dimensional volume, computed once when the hull is built.
  const Rational& volume() const { return volume_; }

  bool operator==(const VPolytope& o) const { return dim_ == o.dim_ && vertices_ == o.vertices_; }

 private:
  VPolytope(int dim, int affine_dim, std::vector<Vec> vertices, Rational volume)
      : dim_(dim), affine_dim_(affine_dim), vertices_(std::move(vertices)), volume_(std::move(volume)) {}
  friend VPolytope convex_hull(std::span<const Vec> points);

  int dim_;
  int affine_dim_;
  std::vector<Vec> vertices_;
  Rational volume_;
};

/// Irredundant hull of a nonempty point list of common dimension n <= max_dimension().
/// Lower-dimensional point sets are canonicalized inside their affine hull.
VPolytope convex_hull(std::span<const Vec> points);
inline VPolytope convex_hull(const std::vector<Vec>& points) {
  return convex_hull(std::span<const Vec>(points));
}

/// Exact n-dimensional volume; zero when the polytope is not full-dimensional.
Rational volume(const VPolytope& p);

/// |I|-dimensional volume of a polytope lying in E, measured inside E.
/// A polytope in the zero subspace has 0-dimensional volume 1.
Rational relative_volume(const VPolytope& p, const CoordSubspace& e);

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q);
VPolytope scale(const VPolytope& p, const Rational& lambda);
VPolytope translate(const VPolytope& p, const Vec& t);
VPolytope reflect(const VPolytope& p, const SignVector& sigma);
VPolytope negate(const VPolytope& p);
/// Orthogonal projection onto E, embedded in R^n (complementary coordinates zeroed).
VPolytope project(const VPolytope& p, const CoordSubspace& e);
bool member(const VPolytope& p, const Vec& x);
/// conv(P u Q).
VPolytope join_hull(const VPolytope& p, const VPolytope& q);
/// Vertex-wise image under a square matrix; a singular map may drop dimension.
VPolytope linear_map(const VPolytope& p, const Matrix& a);

/// True iff every vertex has zero coordinates outside E.
bool lies_in(const VPolytope& p, const CoordSubspace& e);
/// P is a subset of Q, checked by vertex membership.
bool is_subset(const VPolytope& p, const VPolytope& q);

// Common bodies.
VPolytope point_polytope(Vec x);
VPolytope origin(int n);
/// conv{0, e_1, ..., e_n}.
VPolytope standard_simplex(int n);
/// conv{0, alpha_1 e_1, ..., alpha_n e_n}.
VPolytope aligned_simplex(std::span<const Rational> alphas);
/// The box [0, s_1] x ... x [0, s_n].
VPolytope box(std::span<const Rational> sides);
VPolytope unit_cube(int n);

}  // namespace corner
