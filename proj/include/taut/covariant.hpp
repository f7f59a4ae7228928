#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taut/sparse_poly.hpp"

namespace taut {

struct Partition6;

/// Index 0..14 of the pair {j, k} (1 <= j < k <= 6) in lexicographic order.
int pair_index(int j, int k);
std::pair<int, int> pair_of(int index);

/// Monomial in the generators: prod l_i^{l[i-1]} * prod p_jk^{p[pair_index(j,k)]}.
struct GenMonomial {
  std::array<std::uint8_t, 6> l{};
  std::array<std::uint8_t, 15> p{};

  int order() const;
  /// Degree in the coordinates of form i (1-based).
  int form_degree(int i) const;
  GenMonomial operator*(const GenMonomial& o) const;
  std::string to_string() const;

  friend auto operator<=>(const GenMonomial&, const GenMonomial&) = default;
  friend bool operator==(const GenMonomial&, const GenMonomial&) = default;
};

/// Linear combination of generator monomials, sorted and zero-free.
using GenExpr = std::vector<std::pair<GenMonomial, GaussRat>>;

GenExpr gen_normalize(GenExpr e);
GenExpr gen_mul(const GenExpr& a, const GenExpr& b);
GenExpr gen_add(const GenExpr& a, const GenExpr& b, const GaussRat& scale_b = GaussRat(1));
SparsePoly gen_expand(const GenExpr& e);
SparsePoly gen_expand(const GenMonomial& m);

/// The generic binary forms of the expression language.
enum class GenericForm { F6 = 0, F5 = 1, L = 2, Q1 = 3, Q2 = 4, Q3 = 5 };
inline constexpr int kGenericForms = 6;
int generic_degree(GenericForm f);
int generic_first_var(GenericForm f);
std::string_view generic_name(GenericForm f);

/// Degrees of a covariant: per linear form, per generic form, and in (x1, x2).
struct Grading {
  std::array<int, 6> forms{};
  std::array<int, kGenericForms> generic{};
  int order = 0;

  friend bool operator==(const Grading&, const Grading&) = default;
  Grading operator+(const Grading& o) const;
  std::string to_string() const;
};

/// Polynomial covariant with grading metadata and, when known, its expression
/// in the generators l_i, p_jk (used for fast Fourier evaluation).
class Covariant {
 public:
  Covariant() = default;
  /// Computes the grading; throws Grading if poly is not multi-homogeneous.
  explicit Covariant(SparsePoly poly, std::optional<GenExpr> gen = std::nullopt);
  /// For a possibly zero polynomial with known grading.
  Covariant(SparsePoly poly, Grading grading, std::optional<GenExpr> gen = std::nullopt);
  static Covariant from_gen(const GenExpr& gen);

  const SparsePoly& poly() const { return poly_; }
  const Grading& grading() const { return grading_; }
  const std::optional<GenExpr>& gen() const { return gen_; }
  int order() const { return grading_.order; }
  bool is_zero() const { return poly_.is_zero(); }

  /// Common per-form degree d if all six agree and no generic symbols remain.
  std::optional<int> uniform_degree() const;

  Covariant& operator+=(const Covariant& o);
  Covariant& operator-=(const Covariant& o);
  friend Covariant operator+(Covariant a, const Covariant& b) { return a += b; }
  friend Covariant operator-(Covariant a, const Covariant& b) { return a -= b; }
  friend Covariant operator*(const Covariant& a, const Covariant& b);
  Covariant scaled(const GaussRat& c) const;
  Covariant operator-() const { return scaled(GaussRat(-1)); }
  Covariant pow(unsigned e) const;

  friend bool operator==(const Covariant& a, const Covariant& b) { return a.poly_ == b.poly_; }

  /// Coefficients P_j of x1^{b-j} x2^j.
  std::vector<SparsePoly> x_coefficients() const { return poly_.x_coefficients(grading_.order); }

 private:
  SparsePoly poly_;
  Grading grading_;
  std::optional<GenExpr> gen_;
};

Grading grading_of(const SparsePoly& p);

Covariant constant_covariant(const GaussRat& c);
Covariant linear_form(int i);
Covariant pluecker(int i, int j);
Covariant universal_sextic();
/// f6, f5, l, q1, q2, q3 with plain coefficient symbols (no binomials).
Covariant generic_form(GenericForm f);
/// prod_{i<j} p_ij.
Covariant discriminant_root();
/// p_ab p_ac p_bc p_de p_df p_ef for the partition (abc)(def).
Covariant six_p_monomial(const Partition6& pi);

/// (f, g)_r with the classical factorial normalization.
Covariant transvectant(const Covariant& f, const Covariant& g, int r);

struct FormAssignment {
  GenericForm form;
  std::vector<int> linear_forms;  // product of these l_i replaces the form
};
/// Replaces generic coefficient symbols by the coefficients of products of
/// linear forms. Throws DegreeMismatch if a product has the wrong degree.
Covariant specialize_form(const Covariant& c, std::span<const FormAssignment> assignment);

/// Permutation of {1..6} in one-line notation: perm[i-1] = sigma(i).
using Perm6 = std::array<int, 6>;
Perm6 perm_compose(const Perm6& s, const Perm6& t);  // s after t
Perm6 perm_inverse(const Perm6& s);
Perm6 perm_identity();
/// Index relabelling i -> sigma(i) on every l-coordinate.
Covariant s6_act(const Perm6& sigma, const Covariant& c);
SparsePoly s6_act(const Perm6& sigma, const SparsePoly& p);
GenExpr s6_act(const Perm6& sigma, const GenExpr& e);

/// Taylor coefficient of z^{3d+b/2} in (1-z^{b+1})((1-z^{d+1})/(1-z))^6; 0 for b odd.
long dim_graded(int d, int b);

}  // namespace taut
