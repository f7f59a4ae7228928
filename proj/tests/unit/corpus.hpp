#pragma once
// Shared fixtures: covariants written in the paper's notation.

#include <sstream>
#include <string>

#include "taut/covariant.hpp"
#include "taut/covariant_space.hpp"
#include "taut/theta.hpp"

namespace corpus {

using namespace taut;

/// "l1^2 l2 p36^2" -> generator monomial covariant.
inline Covariant mono(const std::string& text) {
  GenMonomial m;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int e = 1;
    if (auto c = tok.find('^'); c != std::string::npos) {
      e = std::stoi(tok.substr(c + 1));
      tok = tok.substr(0, c);
    }
    if (tok[0] == 'l') {
      m.l[static_cast<std::size_t>(tok[1] - '1')] += static_cast<std::uint8_t>(e);
    } else {
      m.p[static_cast<std::size_t>(pair_index(tok[1] - '0', tok[2] - '0'))] += static_cast<std::uint8_t>(e);
    }
  }
  return Covariant::from_gen({{m, GaussRat(1)}});
}

inline Covariant i_basis(int k) {
  static const char* names[] = {"p12 p34 p56", "p12 p35 p46", "p13 p24 p56", "p13 p25 p46", "p14 p25 p36"};
  return mono(names[k - 1]);
}

/// C_1..C_29 of the (2,6) basis list.
inline Covariant c26(int k) {
  static const char* names[] = {
      "l1^2 l2^2 l3^2 p45 p46 p56", "l1^2 l2^2 l3 l4 p36 p45 p56", "l1^2 l2^2 l3 l5 p36 p45 p46",
      "l1^2 l2^2 l4 l5 p36^2 p45", "l1^2 l2^2 l3 l4 p35 p46 p56", "l1^2 l2^2 l4^2 p35 p36 p56",
      "l1^2 l3 l4^2 l5 p26^2 p35", "l1^2 l2 l4^2 l6 p25 p35 p36", "l1^2 l3 l4^2 l5 p25 p26 p36",
      "l1^2 l2 l3 l5^2 p24 p36 p46", "l1^2 l2 l3 l5 l6 p24 p36 p45", "l1^2 l2 l5 l6^2 p24 p34 p35",
      "l1^2 l2 l3 l5 l6 p23 p45 p46", "l1^2 l2 l3 l6^2 p23 p45^2", "l1^2 l3 l4 l5^2 p23 p26 p46",
      "l1 l2^2 l4^2 l6 p16 p35^2", "l1 l2 l3^2 l4 l6 p16 p25 p45", "l1 l2 l3^2 l5 l6 p16 p24 p45",
      "l2 l3^2 l4^2 l5 p16^2 p25", "l2 l3^2 l4 l5^2 p16^2 p24", "l2 l3 l4^2 l5^2 p16^2 p23",
      "l1 l2^2 l3^2 l4 p15 p46 p56", "l3 l4^2 l5^2 l6 p12^2 p36", "l3 l4 l5^2 l6^2 p12 p14 p23",
  };
  if (k <= 5) return universal_sextic() * i_basis(k);
  return mono(names[k - 6]);
}

/// [a,b,c] = p_ab p_ac p_bc p_de p_df p_ef.
inline Covariant bracket(int a, int b, int c) {
  return six_p_monomial(Partition6::from_triple({a, b, c}));
}

/// The quadric-splitting invariant t11 t22 t33 - t12 t13 t23, t_ij = -2 (q_i, q_j)_2.
inline Covariant quadric_invariant() {
  Covariant q[3] = {generic_form(GenericForm::Q1), generic_form(GenericForm::Q2), generic_form(GenericForm::Q3)};
  auto t = [&](int i, int j) { return transvectant(q[i - 1], q[j - 1], 2).scaled(GaussRat(-2)); };
  return t(1, 1) * t(2, 2) * t(3, 3) - t(1, 2) * t(1, 3) * t(2, 3);
}

inline Covariant quadric_invariant_split() {
  const FormAssignment a[] = {{GenericForm::Q1, {1, 2}}, {GenericForm::Q2, {3, 4}}, {GenericForm::Q3, {5, 6}}};
  return specialize_form(quadric_invariant(), a);
}

/// 50 ((f5, f5)_4, l^2)_1 with generic coefficients.
inline Covariant quintic_linear_generic() {
  Covariant f5 = generic_form(GenericForm::F5);
  Covariant l = generic_form(GenericForm::L);
  return transvectant(transvectant(f5, f5, 4), l * l, 1).scaled(GaussRat(50));
}

inline Covariant quintic_linear_split() {
  const FormAssignment a[] = {{GenericForm::F5, {1, 2, 3, 4, 5}}, {GenericForm::L, {6}}};
  return specialize_form(quintic_linear_generic(), a);
}

inline Covariant cubic_product(int a, int b, int c) { return linear_form(a) * linear_form(b) * linear_form(c); }

/// l_a^2 l_b^2 l_c^2 (l_d l_e l_f, l_d l_e l_f)_2.
inline Covariant c28_piece(int a, int b, int c, int d, int e, int f) {
  Covariant g = cubic_product(d, e, f);
  return (linear_form(a) * linear_form(b) * linear_form(c)).pow(2) * transvectant(g, g, 2);
}

/// First spanning member of C'_{d,b} (carries its generator structure).
inline Covariant space_basis_first(int d, int b) { return space_basis(d, b).basis().front(); }

}  // namespace corpus
