#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "taut/covariant.hpp"

namespace taut {

/// Finite-dimensional span of covariants with an exact reduced row-echelon
/// basis. Pivot of a row is its smallest monomial; pivots are unique and no
/// row contains another row's pivot.
class CovariantSpace {
 public:
  CovariantSpace() = default;

  /// Keeps the members of `spanning` that are independent of earlier ones.
  static CovariantSpace span(std::span<const Covariant> spanning);
  /// Smallest S6-stable subspace containing `seeds`.
  static CovariantSpace orbit_span(std::span<const Covariant> seeds);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<Covariant>& basis() const { return basis_; }
  const std::vector<SparsePoly>& rows() const { return rows_; }
  const std::vector<Monomial>& pivots() const { return pivots_; }

  /// Coefficients of w at the pivots (the row coordinates when w is in the span).
  std::vector<GaussRat> pivot_coefficients(const SparsePoly& w) const;
  std::optional<std::vector<GaussRat>> row_coordinates(const SparsePoly& w) const;
  std::optional<std::vector<GaussRat>> basis_coordinates(const SparsePoly& w) const;
  bool contains(const SparsePoly& w) const { return row_coordinates(w).has_value(); }

  /// sum_k c[k] * row_k, carrying generator structure when every basis member has it.
  Covariant row_combination(std::span<const GaussRat> c) const;
  /// Re-expresses a member of the span with generator structure attached.
  Covariant with_structure(const Covariant& c) const;

 private:
  void add(const Covariant& c);
  void finalize();

  std::vector<Covariant> basis_;
  std::vector<SparsePoly> rows_;
  std::vector<Monomial> pivots_;
  std::vector<std::vector<GaussRat>> transform_;  // rows_[k] = sum_j transform_[k][j] * basis_[j]
  std::map<Monomial, std::size_t> pivot_index_;
  bool finalized_ = true;
};

/// Basis of C'_{d,b} from generator monomials; throws TooLarge outside
/// d <= 3, b <= 10 (and the invariant case d = 4, b = 0).
CovariantSpace space_basis(int d, int b);
/// Generator monomials of uniform degree d and order b (the spanning set).
std::vector<GenMonomial> generator_monomials(int d, int b);

}  // namespace taut
