#include <doctest.h>

#include <map>
#include <random>

#include "taut/error.hpp"
#include "taut/fourier_series.hpp"
#include "taut/sparse_poly.hpp"
#include "taut/theta.hpp"

using namespace taut;

namespace {

SparsePoly L(int i, int j) { return SparsePoly::variable(var::l(i, j)); }
SparsePoly X1() { return SparsePoly::variable(var::x1); }
SparsePoly X2() { return SparsePoly::variable(var::x2); }
SparsePoly lin(int i) { return L(i, 1) * X1() + L(i, 2) * X2(); }
SparsePoly plk(int i, int j) { return L(i, 1) * L(j, 2) - L(i, 2) * L(j, 1); }

SparsePoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4), var(0, 13), ex(0, 2), co(-3, 3);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    for (int j = 0; j < 2; ++j) m[var(rng)] += static_cast<std::uint8_t>(ex(rng));
    terms.emplace_back(m, GaussRat(mpq_class(co(rng)), mpq_class(co(rng), 2)));
  }
  return SparsePoly::from_terms(std::move(terms));
}

// Schoolbook product over a std::map, independent of the kernel.
std::map<FourierExp, GaussRat> naive_product(const FourierSeries& a, const FourierSeries& b, int box) {
  std::map<FourierExp, GaussRat> out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      FourierExp e{ea.e1 + eb.e1, ea.e12 + eb.e12, ea.e2 + eb.e2};
      if (e.e1 > box || e.e2 > box) continue;
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

std::map<FourierExp, GaussRat> as_map(const FourierSeries& s) {
  std::map<FourierExp, GaussRat> out;
  for (const auto& [e, c] : s.terms()) out[e] = c;
  return out;
}

FourierSeries random_series(std::mt19937& rng, int box, int f1, int f2, long scale, bool gaussian) {
  std::uniform_int_distribution<int> e1(f1, box), e2(f2, box), e12(-4, 4), co(-5, 5), den(1, 3);
  std::vector<FourierTerm> terms;
  for (int k = 0; k < 25; ++k) {
    mpq_class re(co(rng) * scale, den(rng));
    mpq_class im(gaussian ? co(rng) * scale : 0, den(rng));
    re.canonicalize();
    im.canonicalize();
    terms.emplace_back(FourierExp{e1(rng), e12(rng), e2(rng)}, GaussRat(re, im));
  }
  return FourierSeries::from_terms(box, f1, f2, std::move(terms));
}

}  // namespace

TEST_CASE("gaussian rationals stay canonical") {
  GaussRat a(mpq_class(2, 4), mpq_class(-3, 6));
  CHECK(a.re() == mpq_class(1, 2));
  CHECK(a.to_cache_string() == "1/2 -1/2");
  CHECK(GaussRat::unit_i() * GaussRat::unit_i() == GaussRat(-1));
  CHECK(a * a.inverse() == GaussRat(1));
  CHECK(GaussRat::from_cache_strings("2/4", "0/1") == GaussRat::rational(1, 2));
}

TEST_CASE("polynomial arithmetic") {
  CHECK((X1() + X2()) * (X1() - X2()) == X1().pow(2) - X2().pow(2));
  // two binomials in disjoint variables: 2 x 2 distinct monomials
  CHECK((plk(1, 2) * plk(3, 4)).size() == 4);
  CHECK((lin(1) * SparsePoly()).is_zero());
  CHECK((lin(1) * SparsePoly()).size() == 0);
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    SparsePoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact polynomial division") {
  CHECK(poly_exact_div(lin(1) * lin(2) * lin(3), lin(2)) == lin(1) * lin(3));
  SparsePoly quintic = lin(1) * lin(2) * lin(3) * lin(4) * lin(5);
  CHECK(poly_exact_div(quintic * lin(6), lin(6)) == quintic);
  try {
    poly_exact_div(X1().pow(2) - X2().pow(2), X1() + X2() + SparsePoly(1));
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDivisible);
  }
}

TEST_CASE("series product agrees with schoolbook product") {
  std::mt19937 rng(11);
  for (int it = 0; it < 40; ++it) {
    bool gaussian = it % 2 == 0;
    int fa = it % 3 == 0 ? -2 : 0;
    FourierSeries a = random_series(rng, 10, fa, 0, 1, gaussian);
    FourierSeries b = random_series(rng, 10, 0, fa, 1, !gaussian);
    FourierSeries p = series_mul(a, b);
    CHECK(p.box() == 10 + fa);
    CHECK(as_map(p) == naive_product(a, b, p.box()));
    CHECK(series_mul(b, a) == p);
  }
}

TEST_CASE("series product falls back to big integers") {
  std::mt19937 rng(5);
  const long huge = 1L << 61;
  FourierSeries a = random_series(rng, 8, 0, 0, huge, true);
  FourierSeries b = random_series(rng, 8, 0, 0, huge, true);
  FourierSeries p = series_mul(a, b);
  CHECK(as_map(p) == naive_product(a, b, 8));
}

TEST_CASE("series product is associative and bilinear") {
  std::mt19937 rng(3);
  FourierSeries a = random_series(rng, 9, 0, 0, 1, true);
  FourierSeries b = random_series(rng, 9, 0, 0, 1, false);
  FourierSeries c = random_series(rng, 9, 0, 0, 1, true);
  CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
  CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
}

TEST_CASE("theta products annihilated by the empty series") {
  FourierSeries t = even_theta(1, 12);
  CHECK(series_mul(t, FourierSeries(12)).is_zero());
}

TEST_CASE("series division") {
  const int n = 16;
  SUBCASE("multiply then divide") {
    FourierSeries q = series_div(series_mul(even_theta(1, n), even_theta(2, n)), even_theta(1, n));
    CHECK(q.box() == n);
    CHECK(as_map(q) == as_map(even_theta(2, n)));
  }
  SUBCASE("chi5 squared over chi5") {
    FourierSeries c = chi5(n);
    FourierSeries q = series_div(series_mul(c, c), c);
    CHECK(q.box() == n - 4);
    CHECK(as_map(q) == as_map(c.restricted(n - 4)));
  }
  SUBCASE("round trip on random dividends") {
    std::mt19937 rng(9);
    FourierSeries c = chi5(n);
    for (int it = 0; it < 5; ++it) {
      FourierSeries x = random_series(rng, n, 0, 0, 1, it % 2 == 0);
      FourierSeries prod = series_mul(x, c);
      FourierSeries q = series_div(prod, c);
      CHECK(as_map(q) == as_map(x.restricted(q.box())));
      FourierSeries back = series_mul(q, c);
      CHECK(as_map(back) == as_map(prod.restricted(back.box())));
    }
  }
  SUBCASE("non-divisible dividend") {
    FourierSeries c = chi5(n);
    try {
      series_div(even_theta(1, n), c);
      FAIL("expected NotDivisibleInBox");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotDivisibleInBox);
    }
  }
  SUBCASE("divisor without a unique lowest slice") {
    FourierSeries b = FourierSeries::from_terms(n, 0, 0, {{{1, 0, 0}, GaussRat(1)}, {{0, 0, 1}, GaussRat(1)}});
    try {
      series_div(even_theta(1, n), b);
      FAIL("expected LeadingSliceNotInvertible");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::LeadingSliceNotInvertible);
    }
  }
}
