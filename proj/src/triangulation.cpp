#include "triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "corner/linalg.hpp"

namespace corner::detail {

namespace {

using Wide = __int128;

Integer to_integer(const Integer& v) { return v; }

Integer to_integer(Wide v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer r(static_cast<std::uint64_t>(u >> 64));
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? Integer(-r) : r;
}

Wide to_wide(const Integer& v) {
  // Callers only convert values already bounded well below 2^126.
  const bool neg = v < 0;
  Integer a = neg ? Integer(-v) : v;
  const auto lo = static_cast<std::uint64_t>(a & Integer(~std::uint64_t{0}));
  const auto hi = static_cast<std::uint64_t>(a >> 64);
  Wide r = (static_cast<Wide>(hi) << 64) | static_cast<Wide>(lo);
  return neg ? -r : r;
}

template <class Int>
Int abs_value(const Int& v) {
  return v < 0 ? Int(-v) : v;
}

template <class Int>
Int gcd_of(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Bareiss fraction-free determinant; every intermediate value is a minor.
template <class Int>
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Int(1);
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Int(0);
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

template <class Int>
class PlacingTriangulation {
 public:
  PlacingTriangulation(std::vector<std::vector<Int>> points, int d) : pts_(std::move(points)), d_(d) {}

  PlacingResult run(const std::vector<std::size_t>& order) {
    const std::vector<std::size_t> initial = initial_simplex(order);
    used_.assign(pts_.size(), false);
    for (auto i : initial) used_[i] = true;
    add_simplex_det(initial);
    for (int skip = 0; skip <= d_; ++skip) {
      std::vector<std::size_t> facet;
      for (int k = 0; k <= d_; ++k) {
        if (k != skip) facet.push_back(initial[k]);
      }
      std::sort(facet.begin(), facet.end());
      insert_facet(std::move(facet), initial[skip]);
    }

    for (auto idx : order) {
      if (used_[idx]) continue;
      place(idx);
    }

    PlacingResult result;
    result.det_sum = to_integer(det_sum_);
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (used_[i] && is_extreme(i)) result.vertices.push_back(i);
    }
    return result;
  }

 private:
  struct Facet {
    std::vector<Int> normal;  // outward
    Int offset;               // normal . x <= offset on the hull
  };

  Int dot(const std::vector<Int>& a, const std::vector<Int>& b) const {
    Int s = 0;
    for (int k = 0; k < d_; ++k) s += a[k] * b[k];
    return s;
  }

  std::vector<std::size_t> initial_simplex(const std::vector<std::size_t>& order) const {
    std::vector<std::size_t> chosen{order.front()};
    std::vector<Vec> basis;  // echelon rows of chosen - chosen[0]
    std::vector<int> pivots;
    for (std::size_t k = 1; k < order.size() && static_cast<int>(chosen.size()) <= d_; ++k) {
      Vec row(d_);
      for (int c = 0; c < d_; ++c) {
        row[c] = Rational(to_integer(pts_[order[k]][c]) - to_integer(pts_[order.front()][c]));
      }
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (row[pivots[b]] == 0) continue;
        const Rational f = row[pivots[b]] / basis[b][pivots[b]];
        for (int c = 0; c < d_; ++c) row[c] -= f * basis[b][c];
      }
      const auto it = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
      if (it == row.end()) continue;
      pivots.push_back(static_cast<int>(it - row.begin()));
      basis.push_back(std::move(row));
      chosen.push_back(order[k]);
    }
    if (static_cast<int>(chosen.size()) != d_ + 1) {
      throw std::logic_error("triangulate: point set is not full-dimensional");
    }
    return chosen;
  }

  void add_simplex_det(const std::vector<std::size_t>& simplex) {
    std::vector<std::vector<Int>> m(d_, std::vector<Int>(d_));
    for (int r = 0; r < d_; ++r) {
      for (int c = 0; c < d_; ++c) m[r][c] = pts_[simplex[r + 1]][c] - pts_[simplex[0]][c];
    }
    det_sum_ += abs_value(bareiss_det(std::move(m)));
  }

  // Hyperplane through the facet's d points, oriented away from `inside`.
  void insert_facet(std::vector<std::size_t> facet, std::size_t inside) {
    const auto& base = pts_[facet[0]];
    std::vector<std::vector<Int>> diffs(d_ - 1, std::vector<Int>(d_));
    for (int r = 0; r + 1 < d_; ++r) {
      for (int c = 0; c < d_; ++c) diffs[r][c] = pts_[facet[r + 1]][c] - base[c];
    }
    Facet f;
    f.normal.resize(d_);
    Int g = 0;
    for (int k = 0; k < d_; ++k) {
      std::vector<std::vector<Int>> minor(d_ - 1, std::vector<Int>(d_ - 1));
      for (int r = 0; r + 1 < d_; ++r) {
        for (int c = 0, cc = 0; c < d_; ++c) {
          if (c != k) minor[r][cc++] = diffs[r][c];
        }
      }
      Int cof = bareiss_det(std::move(minor));
      f.normal[k] = (k % 2 == 0) ? cof : Int(-cof);
      g = gcd_of(g, f.normal[k]);
    }
    if (g > 1) {
      for (auto& v : f.normal) v /= g;
    }
    f.offset = dot(f.normal, base);
    if (dot(f.normal, pts_[inside]) > f.offset) {
      for (auto& v : f.normal) v = -v;
      f.offset = -f.offset;
    }
    boundary_.emplace(std::move(facet), std::move(f));
  }

  void place(std::size_t idx) {
    const auto& p = pts_[idx];
    std::vector<typename std::map<std::vector<std::size_t>, Facet>::iterator> visible;
    for (auto it = boundary_.begin(); it != boundary_.end(); ++it) {
      if (dot(it->second.normal, p) > it->second.offset) visible.push_back(it);
    }
    if (visible.empty()) return;  // inside or on the current hull
    used_[idx] = true;

    // New facets: ridge of a visible facet plus p. Count occurrences; those seen
    // twice are shared between two new simplices and are interior.
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> fresh;
    for (auto it : visible) {
      const auto& facet = it->first;
      std::vector<std::size_t> simplex{idx};
      simplex.insert(simplex.end(), facet.begin(), facet.end());
      add_simplex_det(simplex);
      for (std::size_t drop = 0; drop < facet.size(); ++drop) {
        std::vector<std::size_t> nf{idx};
        for (std::size_t k = 0; k < facet.size(); ++k) {
          if (k != drop) nf.push_back(facet[k]);
        }
        std::sort(nf.begin(), nf.end());
        auto& entry = fresh[nf];
        ++entry.first;
        entry.second = facet[drop];
      }
    }
    for (auto it : visible) boundary_.erase(it);
    for (auto& [nf, info] : fresh) {
      if (info.first == 1) insert_facet(nf, info.second);
    }
  }

  // A point on the boundary is a vertex iff the supporting hyperplanes through it
  // have normals spanning R^d.
  bool is_extreme(std::size_t idx) const {
    const auto& p = pts_[idx];
    std::vector<Vec> basis;
    std::vector<int> pivots;
    for (const auto& [key, f] : boundary_) {
      if (dot(f.normal, p) != f.offset) continue;
      Vec row(d_);
      for (int c = 0; c < d_; ++c) row[c] = Rational(to_integer(f.normal[c]));
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (row[pivots[b]] == 0) continue;
        const Rational factor = row[pivots[b]] / basis[b][pivots[b]];
        for (int c = 0; c < d_; ++c) row[c] -= factor * basis[b][c];
      }
      const auto it = std::find_if(row.begin(), row.end(), [](const Rational& v) { return v != 0; });
      if (it == row.end()) continue;
      pivots.push_back(static_cast<int>(it - row.begin()));
      basis.push_back(std::move(row));
      if (static_cast<int>(basis.size()) == d_) return true;
    }
    return false;
  }

  std::vector<std::vector<Int>> pts_;
  int d_;
  std::map<std::vector<std::size_t>, Facet> boundary_;
  std::vector<bool> used_;
  Int det_sum_ = 0;
};

// Far-from-centroid points first: they are likely extreme, so interior points
// are rejected early against a nearly complete hull.
std::vector<std::size_t> insertion_order(const std::vector<std::vector<Integer>>& points, int d) {
  const auto count = static_cast<long>(points.size());
  std::vector<Integer> sum(d, Integer(0));
  for (const auto& p : points) {
    for (int c = 0; c < d; ++c) sum[c] += p[c];
  }
  std::vector<Integer> key(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Integer s = 0;
    for (int c = 0; c < d; ++c) {
      const Integer diff = points[i][c] * count - sum[c];
      s += diff * diff;
    }
    key[i] = s;
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] > key[b]; });
  return order;
}

bool fits_native(const std::vector<std::vector<Integer>>& points, int d) {
  Integer max_abs = 1;
  for (const auto& p : points) {
    for (const auto& v : p) {
      const Integer a = abs(v);
      if (a > max_abs) max_abs = a;
    }
  }
  // Hadamard: every minor of the difference matrices is at most (2C sqrt d)^d.
  // Bareiss forms products of two minors before dividing; dot products and the
  // det accumulation over up to 2^30 simplices need their own headroom.
  const double log_c = static_cast<double>(msb(max_abs) + 1);
  const double log_entry = 1.0 + log_c + 0.5 * std::log2(static_cast<double>(d));
  const double products = 2.0 * d * log_entry + 2.0;
  const double sums = d * log_entry + std::log2(static_cast<double>(d)) + log_c + 30.0;
  return std::max(products, sums) < 120.0;
}

}  // namespace

PlacingResult triangulate(const std::vector<std::vector<Integer>>& points) {
  if (points.empty()) throw std::invalid_argument("triangulate: no points");
  const int d = static_cast<int>(points.front().size());
  if (d < 1) throw std::invalid_argument("triangulate: dimension must be positive");
  const auto order = insertion_order(points, d);
  if (fits_native(points, d)) {
    std::vector<std::vector<Wide>> native(points.size(), std::vector<Wide>(d));
    for (std::size_t i = 0; i < points.size(); ++i) {
      for (int c = 0; c < d; ++c) native[i][c] = to_wide(points[i][c]);
    }
    return PlacingTriangulation<Wide>(std::move(native), d).run(order);
  }
  return PlacingTriangulation<Integer>(points, d).run(order);
}

}  // namespace corner::detail
