#include <doctest.h>

#include "corpus.hpp"
#include "taut/error.hpp"
#include "taut/symmetry.hpp"

using namespace taut;
using namespace corpus;

namespace {

YoungPartition P(const char* s) { return YoungPartition::parse(s); }

long mult(const std::vector<IsotypicPart>& parts, const char* lambda) {
  for (const auto& p : parts) {
    if (p.lambda == P(lambda)) return p.multiplicity;
  }
  return 0;
}

long total_dim(const std::vector<IsotypicPart>& parts) {
  long d = 0;
  for (const auto& p : parts) d += p.dimension;
  return d;
}

// chi of Sym^d V via h_d = sum over nu |- d of p_nu / z_nu, p_k(g) = chi_V(g^k).
mpq_class sym_power_character(const YoungPartition& v, int d, const Perm6& g) {
  if (d == 0) return 1;
  auto chi_pow = [&](int k) {
    Perm6 h = perm_identity();
    for (int i = 0; i < k; ++i) h = perm_compose(g, h);
    return mpq_class(character(v, cycle_type(h)));
  };
  // enumerate partitions of d
  mpq_class total = 0;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      mpq_class term = 1;
      mpz_class z = 1;
      std::map<int, int> m;
      for (int p : parts) {
        term *= chi_pow(p);
        ++m[p];
      }
      for (auto [p, c] : m) {
        for (int i = 0; i < c; ++i) z *= p;
        for (int i = 2; i <= c; ++i) z *= i;
      }
      total += term / mpq_class(z);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(d, d);
  return total;
}

// Multiplicities of Sym^d(s[3^2]) - Sym^{d-3}(s[3^2]) (x) sign.
std::vector<long> invariant_formula(int d) {
  std::vector<long> out;
  for (const auto& lambda : partitions_of_6()) {
    mpq_class m = 0;
    for (const auto& mu : partitions_of_6()) {
      Perm6 g = class_representative(mu);
      mpq_class chi = sym_power_character(P("3,3"), d, g);
      if (d >= 3) chi -= sym_power_character(P("3,3"), d - 3, g) * character(P("1^6"), mu);
      m += chi * class_size(mu) * character(lambda, mu);
    }
    m /= 720;
    out.push_back(m.get_num().get_si());
  }
  return out;
}

}  // namespace

TEST_CASE("character table") {
  CHECK(character(P("1^6"), P("2,1^4")) == -1);
  CHECK(character(P("5,1"), P("1^6")) == 5);
  const long dims[] = {1, 5, 9, 10, 5, 16, 10, 5, 9, 5, 1};
  long sizes = 0;
  for (std::size_t i = 0; i < 11; ++i) {
    CHECK(character(partitions_of_6()[i], P("1^6")) == dims[i]);
    sizes += class_size(partitions_of_6()[i]);
  }
  CHECK(sizes == 720);
  for (const auto& a : partitions_of_6()) {
    for (const auto& b : partitions_of_6()) {
      long s = 0;
      for (const auto& mu : partitions_of_6()) s += class_size(mu) * character(a, mu) * character(b, mu);
      CHECK(s == (a == b ? 720 : 0));
    }
  }
  for (const auto& mu : partitions_of_6()) CHECK(cycle_type(class_representative(mu)) == mu);
  CHECK(P("[4,1^2]").to_string() == "[4,1^2]");
  CHECK(P("411") == P("4,1,1"));
}

TEST_CASE("C'(1,2) is irreducible of type [4,2]") {
  CovariantSpace s = space_basis(1, 2);
  auto parts = decompose(s);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].lambda == P("4,2"));
  CHECK(isotypic_project(s, P("4,2")).size() == 9);
  CHECK(isotypic_project(s, P("6")).empty());
  Covariant c0 = pluecker(3, 6) * pluecker(4, 5) * linear_form(1) * linear_form(2);
  Covariant seeds[] = {c0};
  CHECK(CovariantSpace::orbit_span(seeds).dim() == 9);
}

TEST_CASE("C'(2,4) and C'(2,6)") {
  auto p24 = decompose(space_basis(2, 4));
  CHECK(mult(p24, "6") == 1);
  CHECK(mult(p24, "5,1") == 1);
  CHECK(mult(p24, "4,2") == 2);
  CHECK(mult(p24, "3,2,1") == 1);
  CHECK(total_dim(p24) == 40);

  CovariantSpace s26 = space_basis(2, 6);
  auto p26 = decompose(s26);
  CHECK(p26.size() == 4);
  CHECK(mult(p26, "5,1") == 1);
  CHECK(mult(p26, "4,2") == 1);
  CHECK(mult(p26, "4,1^2") == 1);
  CHECK(mult(p26, "3^2") == 1);

  auto g = isotypic_project(s26, P("4,1^2"));
  CHECK(g.size() == 10);
  CovariantSpace gs = CovariantSpace::span(g);
  Covariant seeds[] = {c26(6)};
  CovariantSpace orbit = CovariantSpace::orbit_span(seeds);
  CHECK(orbit.dim() == 10);
  for (const auto& c : orbit.basis()) CHECK(gs.contains(c.poly()));
  Covariant seeds1[] = {c26(1)};
  CHECK(decompose(CovariantSpace::orbit_span(seeds1))[0].lambda == P("3^2"));
  // the displayed generators of the [5,1] and [4,2] components
  const std::pair<int, long> gen51[] = {{1, 4}, {2, -4}, {3, -1}, {4, 1}, {5, 6}, {7, -7}, {8, 4}, {9, 1}, {10, 1},
                                        {11, 3}, {13, 1}, {15, -1}, {21, 1}, {22, -1}, {27, -1}, {28, 5}};
  Covariant c51 = constant_covariant(GaussRat(0)) * c26(1);
  for (auto [k, v] : gen51) c51 += c26(k).scaled(GaussRat(v));
  Covariant c42 = c26(1).scaled(GaussRat(2)) - c26(2).scaled(GaussRat(2)) + c26(7) - c26(8).scaled(GaussRat(3)) +
                  c26(9) - c26(16).scaled(GaussRat(4));
  CHECK(isotypic_component_of(s26, P("5,1"), c51) == c51);
  CHECK(isotypic_component_of(s26, P("4,2"), c42) == c42);
}

TEST_CASE("projectors") {
  CovariantSpace s = space_basis(2, 4);
  const std::size_t n = s.dim();
  std::vector<std::vector<std::vector<GaussRat>>> ps;
  for (const char* l : {"5,1", "4,2", "6"}) ps.push_back(isotypic_projector(s, P(l)));
  auto mul = [n](const auto& a, const auto& b) {
    std::vector<std::vector<GaussRat>> c(n, std::vector<GaussRat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (!a[i][k].is_zero())
          for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  for (std::size_t i = 0; i < ps.size(); ++i) {
    CHECK(mul(ps[i], ps[i]) == ps[i]);
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      for (const auto& row : mul(ps[i], ps[j]))
        for (const auto& x : row) CHECK(x.is_zero());
    }
  }
  // projection commutes with the action
  Perm6 sigma{2, 3, 1, 5, 6, 4};
  auto r = action_matrix(s, sigma);
  CHECK(mul(r, ps[1]) == mul(ps[1], r));
}

TEST_CASE("invariants follow the symmetric-power formula") {
  for (int d = 1; d <= 4; ++d) {
    CovariantSpace s = space_basis(d, 0);
    auto parts = decompose(s);
    auto formula = invariant_formula(d);
    INFO("d=" << d);
    for (std::size_t i = 0; i < partitions_of_6().size(); ++i) {
      CHECK(mult(parts, partitions_of_6()[i].to_string().c_str()) == formula[i]);
    }
  }
}

TEST_CASE("the [5,1] orbit inside C'(2,8)") {
  Covariant seed = c28_piece(1, 2, 3, 4, 5, 6);
  Covariant seeds[] = {seed};
  CovariantSpace full = CovariantSpace::orbit_span(seeds);
  CHECK(full.dim() == 15);
  Covariant w = seed - c28_piece(4, 5, 6, 1, 2, 3);
  Covariant wseeds[] = {w};
  CovariantSpace ws = CovariantSpace::orbit_span(wseeds);
  CHECK(ws.dim() == 5);
  auto parts = decompose(ws);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].lambda == P("5,1"));
}

TEST_CASE("non-stable spans are rejected") {
  Covariant one[] = {c26(6)};
  CovariantSpace s = CovariantSpace::span(one);
  try {
    decompose(s);
    FAIL("expected NotClosedUnderAction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosedUnderAction);
  }
}
