#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taut/gauss_rat.hpp"

namespace taut {

/// Global variable registry shared by every polynomial in the library.
///
/// Slots 0..11 hold the coordinates l_{i,1}, l_{i,2} of the six linear forms
/// (l_{i,j} lives at 2(i-1)+(j-1)), followed by x1, x2, the valuation
/// parameter t, and the coefficient symbols of the generic binary forms.
namespace var {
inline constexpr int kLinearCoords = 12;
inline constexpr int x1 = 12;
inline constexpr int x2 = 13;
inline constexpr int t = 14;
inline constexpr int f6_first = 15;  // a0..a6 of the sextic f6
inline constexpr int f5_first = 22;  // e0..e5 of the quintic f5
inline constexpr int lin_first = 28;  // u0, u1 of the generic linear form l
inline constexpr int q1_first = 30;  // qa0..qa2
inline constexpr int q2_first = 33;  // qb0..qb2
inline constexpr int q3_first = 36;  // qc0..qc2
inline constexpr int kCount = 39;

constexpr int l(int form, int coord) { return 2 * (form - 1) + (coord - 1); }

std::string_view name(int index);
std::optional<int> index_of(std::string_view name);
}  // namespace var

/// Exponent vector over the registry. Lexicographic comparison on the raw
/// array is the monomial order used throughout (lex with l_{1,1} largest).
struct Monomial {
  std::array<std::uint8_t, 40> exp{};

  std::uint8_t operator[](int v) const { return exp[static_cast<std::size_t>(v)]; }
  std::uint8_t& operator[](int v) { return exp[static_cast<std::size_t>(v)]; }

  int total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial operator/(const Monomial& other) const;  // caller guarantees divides()

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

using Term = std::pair<Monomial, GaussRat>;

/// Sparse multivariate polynomial over Q(i).
///
/// Terms are stored sorted ascending by monomial with no zero coefficients,
/// so structural equality is polynomial equality.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(const GaussRat& c);  // NOLINT(google-explicit-constructor)
  SparsePoly(long c) : SparsePoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)

  static SparsePoly variable(int v, int exponent = 1);
  static SparsePoly monomial(const Monomial& m, const GaussRat& c);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static SparsePoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  GaussRat coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.back(); }

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;
  SparsePoly scaled(const GaussRat& c) const;
  SparsePoly pow(unsigned e) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

  /// Maximum exponent of v over all terms (-1 for the zero polynomial).
  int degree(int v) const;
  /// Sum of exponents over the given variables if every term agrees, else nullopt.
  /// The zero polynomial reports nullopt.
  std::optional<int> homogeneous_degree(std::span<const int> vars) const;

  SparsePoly derivative(int v) const;

  /// Simultaneous substitution v -> images[v] for every v with a mapping.
  SparsePoly substitute(std::span<const std::pair<int, SparsePoly>> images) const;
  /// Renames variables: v -> perm[v] (perm must be a bijection on the registry).
  SparsePoly rename(const std::array<int, var::kCount>& perm) const;

  /// Coefficients P_j of x1^{b-j} x2^j, j = 0..b. Throws Grading if the
  /// polynomial is not homogeneous of degree b in (x1, x2).
  std::vector<SparsePoly> x_coefficients(int b) const;
  static SparsePoly from_x_coefficients(std::span<const SparsePoly> coeffs);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b; throws NotDivisible when b does not divide a.
SparsePoly poly_exact_div(const SparsePoly& a, const SparsePoly& b);

}  // namespace taut
