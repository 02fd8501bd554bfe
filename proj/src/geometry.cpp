#include "corner/geometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "corner/lp.hpp"
#include "triangulation.hpp"

namespace corner {

namespace {

constexpr int kDefaultMaxDimension = 8;

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
  }
}

Integer lcm_of(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

}  // namespace

int max_dimension() {
  static const int cap = [] {
    if (const char* env = std::getenv("CORNER_MIXVOL_MAX_DIM")) {
      try {
        const int v = std::stoi(env);
        if (v >= 1 && v <= 63) return v;
      } catch (const std::exception&) {
      }
    }
    return kDefaultMaxDimension;
  }();
  return cap;
}

// ---------------------------------------------------------------- CoordSubspace

CoordSubspace::CoordSubspace(int ambient_dim, std::uint64_t index_mask) : ambient_dim_(ambient_dim), mask_(index_mask) {
  if (ambient_dim < 0 || ambient_dim > 63) throw std::invalid_argument("CoordSubspace: bad ambient dimension");
  if ((index_mask >> ambient_dim) != 0) throw std::invalid_argument("CoordSubspace: index out of range");
}

CoordSubspace CoordSubspace::from_indices(int ambient_dim, std::span<const int> indices) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= ambient_dim) throw std::invalid_argument("CoordSubspace: index out of range");
    if ((mask >> i) & 1U) throw std::invalid_argument("CoordSubspace: repeated index");
    mask |= std::uint64_t{1} << i;
  }
  return CoordSubspace(ambient_dim, mask);
}

CoordSubspace CoordSubspace::whole(int ambient_dim) {
  return CoordSubspace(ambient_dim, ambient_dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ambient_dim) - 1);
}

int CoordSubspace::size() const { return std::popcount(mask_); }

std::vector<int> CoordSubspace::indices() const {
  std::vector<int> out;
  for (int i = 0; i < ambient_dim_; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

CoordSubspace CoordSubspace::complement() const {
  return CoordSubspace(ambient_dim_, whole(ambient_dim_).mask() & ~mask_);
}

std::vector<CoordSubspace> CoordSubspace::all_of_size(int ambient_dim, int k) {
  std::vector<CoordSubspace> out;
  const std::uint64_t limit = std::uint64_t{1} << ambient_dim;
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (std::popcount(m) == k) out.emplace_back(ambient_dim, m);
  }
  return out;
}

// ------------------------------------------------------------------ SignVector

SignVector::SignVector(int dim, std::uint64_t negative_mask) : dim_(dim), mask_(negative_mask) {
  if (dim < 1 || dim > 63) throw std::invalid_argument("SignVector: bad dimension");
  if ((negative_mask >> dim) != 0) throw std::invalid_argument("SignVector: mask out of range");
}

SignVector SignVector::negative(int dim) { return SignVector(dim, CoordSubspace::whole(dim).mask()); }

SignVector SignVector::parse(std::string_view text) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '-') {
      mask |= std::uint64_t{1} << i;
    } else if (text[i] != '+') {
      throw std::invalid_argument("sign vector must consist of '+' and '-': '" + std::string(text) + "'");
    }
  }
  return SignVector(static_cast<int>(text.size()), mask);
}

std::vector<SignVector> SignVector::all(int dim) {
  std::vector<SignVector> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << dim); ++m) out.emplace_back(dim, m);
  return out;
}

SignVector SignVector::negated() const { return SignVector(dim_, CoordSubspace::whole(dim_).mask() & ~mask_); }

bool SignVector::agrees_on(const SignVector& other, const CoordSubspace& e) const {
  return ((mask_ ^ other.mask_) & e.mask()) == 0;
}

std::string SignVector::str() const {
  std::string s(dim_, '+');
  for (int i = 0; i < dim_; ++i) {
    if ((*this)[i] < 0) s[i] = '-';
  }
  return s;
}

// ------------------------------------------------------------------ hull

VPolytope convex_hull(std::span<const Vec> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point list");
  const int n = static_cast<int>(points.front().size());
  if (n < 1) throw std::invalid_argument("convex_hull: dimension must be positive");
  if (n > max_dimension()) {
    throw std::invalid_argument("convex_hull: dimension " + std::to_string(n) + " exceeds cap " +
                                std::to_string(max_dimension()));
  }
  for (const auto& p : points) require_same_dim(static_cast<int>(p.size()), n, "convex_hull");

  std::vector<Vec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) {
    return VPolytope(n, 0, std::move(pts), Rational(0));
  }

  // Affine rank and pivot columns; projecting onto the pivot columns is an
  // affine isomorphism of the affine hull onto R^r.
  std::vector<Vec> basis;
  std::vector<int> pivots;
  for (std::size_t i = 1; i < pts.size() && static_cast<int>(basis.size()) < n; ++i) {
    Vec row(n);
    for (int c = 0; c < n; ++c) row[c] = pts[i][c] - pts[0][c];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (row[pivots[b]] == 0) continue;
      const Rational f = row[pivots[b]] / basis[b][pivots[b]];
      for (int c = 0; c < n; ++c) row[c] -= f * basis[b][c];
    }
    const auto it = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
    if (it == row.end()) continue;
    pivots.push_back(static_cast<int>(it - row.begin()));
    basis.push_back(std::move(row));
  }
  std::vector<int> cols = pivots;
  std::sort(cols.begin(), cols.end());
  const int r = static_cast<int>(cols.size());

  Integer scale_factor = 1;
  for (const auto& p : pts) {
    for (int c : cols) scale_factor = lcm_of(scale_factor, denominator(p[c]));
  }
  std::vector<std::vector<Integer>> scaled(pts.size(), std::vector<Integer>(r));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int k = 0; k < r; ++k) {
      const Rational v = pts[i][cols[k]] * scale_factor;
      scaled[i][k] = numerator(v);
    }
  }

  const auto placed = detail::triangulate(scaled);
  std::vector<Vec> vertices;
  vertices.reserve(placed.vertices.size());
  for (auto idx : placed.vertices) vertices.push_back(pts[idx]);

  Rational vol = 0;
  if (r == n) {
    Integer denom = factorial(n);
    for (int k = 0; k < n; ++k) denom *= scale_factor;
    vol = Rational(placed.det_sum, denom);
  }
  return VPolytope(n, r, std::move(vertices), std::move(vol));
}

Rational volume(const VPolytope& p) { return p.volume(); }

bool lies_in(const VPolytope& p, const CoordSubspace& e) {
  require_same_dim(p.dim(), e.ambient_dim(), "lies_in");
  for (const auto& v : p.vertices()) {
    for (int i = 0; i < p.dim(); ++i) {
      if (!e.contains(i) && v[i] != 0) return false;
    }
  }
  return true;
}

Rational relative_volume(const VPolytope& p, const CoordSubspace& e) {
  if (!lies_in(p, e)) throw std::invalid_argument("relative_volume: polytope is not contained in the subspace");
  const auto idx = e.indices();
  if (idx.empty()) return 1;
  std::vector<Vec> reduced;
  reduced.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    Vec w;
    w.reserve(idx.size());
    for (int i : idx) w.push_back(v[i]);
    reduced.push_back(std::move(w));
  }
  return convex_hull(reduced).volume();
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  require_same_dim(p.dim(), q.dim(), "minkowski_sum");
  std::vector<Vec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      Vec s(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) s[k] = a[k] + b[k];
      sums.push_back(std::move(s));
    }
  }
  return convex_hull(sums);
}

VPolytope scale(const VPolytope& p, const Rational& lambda) {
  if (lambda < 0) throw std::invalid_argument("scale: negative factor");
  if (lambda == 0) return origin(p.dim());
  std::vector<Vec> pts = p.vertices();
  for (auto& v : pts) {
    for (auto& x : v) x *= lambda;
  }
  return convex_hull(pts);
}

VPolytope translate(const VPolytope& p, const Vec& t) {
  require_same_dim(p.dim(), static_cast<int>(t.size()), "translate");
  std::vector<Vec> pts = p.vertices();
  for (auto& v : pts) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += t[k];
  }
  return convex_hull(pts);
}

VPolytope reflect(const VPolytope& p, const SignVector& sigma) {
  require_same_dim(p.dim(), sigma.dim(), "reflect");
  std::vector<Vec> pts = p.vertices();
  for (auto& v : pts) {
    for (int k = 0; k < p.dim(); ++k) {
      if (sigma[k] < 0) v[k] = -v[k];
    }
  }
  return convex_hull(pts);
}

VPolytope negate(const VPolytope& p) { return reflect(p, SignVector::negative(p.dim())); }

VPolytope project(const VPolytope& p, const CoordSubspace& e) {
  require_same_dim(p.dim(), e.ambient_dim(), "project");
  std::vector<Vec> pts = p.vertices();
  for (auto& v : pts) {
    for (int k = 0; k < p.dim(); ++k) {
      if (!e.contains(k)) v[k] = 0;
    }
  }
  return convex_hull(pts);
}

bool member(const VPolytope& p, const Vec& x) {
  require_same_dim(p.dim(), static_cast<int>(x.size()), "member");
  return in_convex_hull(p.vertices(), x);
}

VPolytope join_hull(const VPolytope& p, const VPolytope& q) {
  require_same_dim(p.dim(), q.dim(), "join_hull");
  std::vector<Vec> pts = p.vertices();
  pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  return convex_hull(pts);
}

VPolytope linear_map(const VPolytope& p, const Matrix& a) {
  if (static_cast<int>(a.size()) != p.dim()) throw std::invalid_argument("linear_map: dimension mismatch");
  for (const auto& row : a) require_same_dim(static_cast<int>(row.size()), p.dim(), "linear_map");
  std::vector<Vec> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(multiply(a, v));
  return convex_hull(pts);
}

bool is_subset(const VPolytope& p, const VPolytope& q) {
  return std::all_of(p.vertices().begin(), p.vertices().end(), [&](const Vec& v) { return member(q, v); });
}

VPolytope point_polytope(Vec x) {
  std::vector<Vec> pts{std::move(x)};
  return convex_hull(pts);
}

VPolytope origin(int n) { return point_polytope(Vec(n, Rational(0))); }

VPolytope standard_simplex(int n) {
  const std::vector<Rational> ones(n, Rational(1));
  return aligned_simplex(ones);
}

VPolytope aligned_simplex(std::span<const Rational> alphas) {
  const int n = static_cast<int>(alphas.size());
  std::vector<Vec> pts{Vec(n, Rational(0))};
  for (int i = 0; i < n; ++i) {
    if (alphas[i] < 0) throw std::invalid_argument("aligned_simplex: negative axis scalar");
    Vec v(n, Rational(0));
    v[i] = alphas[i];
    pts.push_back(std::move(v));
  }
  return convex_hull(pts);
}

VPolytope box(std::span<const Rational> sides) {
  const int n = static_cast<int>(sides.size());
  std::vector<Vec> pts;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Vec v(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      if (sides[i] < 0) throw std::invalid_argument("box: negative side");
      if ((m >> i) & 1U) v[i] = sides[i];
    }
    pts.push_back(std::move(v));
  }
  return convex_hull(pts);
}

VPolytope unit_cube(int n) {
  const std::vector<Rational> ones(n, Rational(1));
  return box(ones);
}

}  // namespace corner
