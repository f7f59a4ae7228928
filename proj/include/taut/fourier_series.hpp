#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taut/gauss_rat.hpp"

namespace taut {

/// Exponent triple of Q1^{e1} Q12^{e12} Q2^{e2}.
struct FourierExp {
  int e1 = 0;
  int e12 = 0;
  int e2 = 0;

  friend auto operator<=>(const FourierExp&, const FourierExp&) = default;
  friend bool operator==(const FourierExp&, const FourierExp&) = default;
};

using FourierTerm = std::pair<FourierExp, GaussRat>;

/// Box-truncated series in Q1, Q2 with Laurent middle variable Q12.
///
/// A term is stored iff floor1 <= e1 <= box and floor2 <= e2 <= box. Every
/// coefficient inside that rectangle is exact; nothing is known outside it.
class FourierSeries {
 public:
  FourierSeries() = default;
  explicit FourierSeries(int box, int floor1 = 0, int floor2 = 0)
      : box_(box), floor1_(floor1), floor2_(floor2) {}

  /// Terms outside the rectangle are dropped, repeated exponents summed.
  static FourierSeries from_terms(int box, int floor1, int floor2, std::vector<FourierTerm> terms);
  static FourierSeries constant(int box, const GaussRat& c);

  int box() const { return box_; }
  int floor1() const { return floor1_; }
  int floor2() const { return floor2_; }
  std::span<const FourierTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GaussRat coefficient(const FourierExp& e) const;

  /// Same series viewed in a smaller box (box must not grow).
  FourierSeries restricted(int box) const;
  /// Same terms with a lower declared floor (used to align operands).
  FourierSeries with_floor(int floor1, int floor2) const;

  FourierSeries scaled(const GaussRat& c) const;
  FourierSeries operator-() const { return scaled(GaussRat(-1)); }
  friend FourierSeries operator+(const FourierSeries& a, const FourierSeries& b);
  friend FourierSeries operator-(const FourierSeries& a, const FourierSeries& b);

  /// Same box, floors and terms.
  friend bool operator==(const FourierSeries& a, const FourierSeries& b);

  /// Lowest and highest e1 + e2 among stored terms.
  int min_total_order() const;

  /// Smallest box-relative exponents: (min e1, min e2) over stored terms.
  std::pair<int, int> min_orders() const;

  /// Terms with the given (e1, e2), as (e12, coefficient) ascending.
  std::vector<std::pair<int, GaussRat>> slice(int e1, int e2) const;

  /// Returns true iff e12^2 <= e1*e2 for every stored term.
  bool is_semipositive() const;

  std::string to_string(int max_terms = 12) const;

 private:
  int box_ = 0;
  int floor1_ = 0;
  int floor2_ = 0;
  std::vector<FourierTerm> terms_;  // sorted lexicographically by (e1, e12, e2)
};

/// Exact product restricted to the common valid box.
FourierSeries series_mul(const FourierSeries& a, const FourierSeries& b);

/// Exact quotient q with q*b = a on the shrunken box. See series_div in the
/// docs for the admissible divisors.
FourierSeries series_div(const FourierSeries& a, const FourierSeries& b);

/// a^e by repeated squaring (e >= 0; a^0 is the constant 1 in a's box).
FourierSeries series_pow(const FourierSeries& a, unsigned e);

}  // namespace taut
