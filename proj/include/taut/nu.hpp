#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "taut/covariant.hpp"
#include "taut/fourier_series.hpp"

namespace taut {

/// Meromorphic vector-valued form  components * chi5^content / chi5^exponent.
///
/// components[j] is the coefficient of x1^{b-j} x2^j. `content` is a power of
/// chi5 known to divide the numerator symbolically; it is cancelled before any
/// series division is attempted.
struct MeroForm {
  std::vector<FourierSeries> components;
  int chi5_content = 0;
  mpq_class chi5_exponent;
  int weight_j = 0;
  mpq_class weight_k;

  /// Smallest box among the components.
  int box() const;
  /// components * chi5^content.
  std::vector<FourierSeries> numerator() const;
};

/// l_{i,c} -> G_{i,c}, divided by chi5^d. Realizes the substitution map up to
/// the constant (-2^36)^{-d}.
MeroForm nu_eval(const Covariant& c, int box);

/// Removes `steps` powers of chi5 from the pole, first from the symbolic
/// content, then by series division (may throw NotDivisibleInBox).
MeroForm reduce(const MeroForm& f, int steps);
/// reduce(f, exponent).
MeroForm reduce_fully(const MeroForm& f);
/// f * chi5^p (adds 5p to the weight).
MeroForm times_chi5_power(const MeroForm& f, int p);

struct FourierIndex {
  int n = 0;
  int r = 0;
  int m = 0;
  FourierExp exponent() const { return {4 * n, 2 * r, 4 * m}; }
};

/// Coefficient vector at (e1, e12, e2) = (4n, 2r, 4m); needs exponent 0.
std::vector<GaussRat> fourier_coefficient(const MeroForm& f, const FourierIndex& idx);

enum class Profile { Gamma0_2, Gamma2_w };
std::optional<Profile> profile_from_name(std::string_view name);

/// Evaluates a covariant in generic quadrics (Gamma0_2) or in a quintic and a
/// linear form (Gamma2_w) on the corresponding splitting of chi_{6,-2}.
MeroForm profile_eval(Profile profile, const Covariant& c, int box);

/// lambda with a == lambda * b on the common window of all components
/// (lambda = 0 if a vanishes there); nullopt if no such scalar exists or b
/// vanishes while a does not.
std::optional<GaussRat> proportionality(std::span<const FourierSeries> a, std::span<const FourierSeries> b);

/// Symmetric power sym^n of linear forms (G_{i,1} x1 + G_{i,2} x2), i in `forms`.
std::vector<FourierSeries> sym_gradients(std::span<const int> forms, int box);

}  // namespace taut
