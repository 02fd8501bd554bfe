#include "corner/lp.hpp"

#include <stdexcept>

namespace corner {

std::optional<Vec> find_nonnegative_solution(const Matrix& a, const Vec& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("lp: rhs size mismatch");
  const std::size_t vars = rows == 0 ? 0 : a[0].size();
  if (rows == 0) return Vec(vars, Rational(0));

  // Tableau columns: [0, vars) originals, [vars, vars + rows) artificials, last = rhs.
  const std::size_t cols = vars + rows;
  Matrix t(rows, Vec(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != vars) throw std::invalid_argument("lp: ragged matrix");
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < vars; ++c) t[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
    t[r][vars + r] = 1;
    t[r][cols] = flip ? Rational(-b[r]) : b[r];
    basis[r] = vars + r;
  }

  // Phase-one objective: minimize the sum of artificials, kept as reduced costs.
  Vec cost(cols + 1, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < vars; ++c) cost[c] -= t[r][c];
    cost[cols] -= t[r][cols];
  }

  while (true) {
    std::size_t entering = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (cost[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == cols) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][entering] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][entering];
      if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so an entering column always has a pivot row.
    if (leaving == rows) throw std::logic_error("lp: unbounded phase-one problem");

    const Rational pivot = t[leaving][entering];
    for (auto& v : t[leaving]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leaving || t[r][entering] == 0) continue;
      const Rational f = t[r][entering];
      for (std::size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[leaving][c];
    }
    if (cost[entering] != 0) {
      const Rational f = cost[entering];
      for (std::size_t c = 0; c <= cols; ++c) cost[c] -= f * t[leaving][c];
    }
    basis[leaving] = entering;
  }

  if (cost[cols] != 0) return std::nullopt;
  Vec x(vars, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) x[basis[r]] = t[r][cols];
  }
  return x;
}

bool in_convex_hull(std::span<const Vec> points, const Vec& x) {
  if (points.empty()) return false;
  const std::size_t n = x.size();
  for (const auto& p : points) {
    if (p.size() != n) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    if (p == x) return true;
  }
  Matrix a(n + 1, Vec(points.size()));
  Vec b(n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < points.size(); ++i) a[k][i] = points[i][k];
    b[k] = x[k];
  }
  for (std::size_t i = 0; i < points.size(); ++i) a[n][i] = 1;
  b[n] = 1;
  return find_nonnegative_solution(a, b).has_value();
}

}  // namespace corner
