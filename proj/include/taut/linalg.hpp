#pragma once

#include <optional>
#include <vector>

#include "taut/gauss_rat.hpp"

namespace taut {

using Matrix = std::vector<std::vector<GaussRat>>;

struct LinearSolution {
  std::vector<GaussRat> particular;
  std::vector<std::vector<GaussRat>> kernel;  // basis of the homogeneous solutions
};

/// Exact solution set of A x = b over Q(i); nullopt if inconsistent.
std::optional<LinearSolution> solve_linear(const Matrix& a, const std::vector<GaussRat>& b);

std::size_t matrix_rank(const Matrix& a);

}  // namespace taut
