#include "taut/linalg.hpp"

namespace taut {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const GaussRat inv = m[row][c].inverse();
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const GaussRat f = m[r][c];
      for (std::size_t k = c; k < m[r].size(); ++k) {
        if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<GaussRat>& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  Matrix m = a;
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  const auto pivots = rref(m, n);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (!m[r][n].is_zero()) return std::nullopt;
  }
  LinearSolution s;
  s.particular.assign(n, GaussRat(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    s.particular[pivots[r]] = m[r][n];
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<GaussRat> v(n, GaussRat(0));
    v[f] = GaussRat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    s.kernel.push_back(std::move(v));
  }
  return s;
}

std::size_t matrix_rank(const Matrix& a) {
  Matrix m = a;
  return rref(m, a.empty() ? 0 : a[0].size()).size();
}

}  // namespace taut
