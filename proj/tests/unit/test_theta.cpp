#include <doctest.h>

#include <set>

#include "taut/error.hpp"
#include "taut/theta.hpp"

using namespace taut;

namespace {

FourierSeries product_of_thetas(const std::array<int, 4>& idx, int n) {
  FourierSeries p = even_theta(idx[0], n);
  for (std::size_t k = 1; k < idx.size(); ++k) p = series_mul(p, even_theta(idx[k], n));
  return p;
}

// Sum of three odd characteristics reduced mod 2.
std::array<int, 4> char_sum(const std::array<int, 3>& odd) {
  std::array<int, 4> s{};
  for (int a : odd) {
    const auto& c = odd_characteristics()[static_cast<std::size_t>(a - 1)];
    s[0] ^= c.mu1;
    s[1] ^= c.mu2;
    s[2] ^= c.nu1;
    s[3] ^= c.nu2;
  }
  return s;
}

}  // namespace

TEST_CASE("characteristics") {
  for (const auto& c : even_characteristics()) CHECK(c.even());
  for (const auto& c : odd_characteristics()) CHECK_FALSE(c.even());
  std::set<std::array<int, 4>> all;
  for (const auto& c : even_characteristics()) all.insert({c.mu1, c.mu2, c.nu1, c.nu2});
  for (const auto& c : odd_characteristics()) all.insert({c.mu1, c.mu2, c.nu1, c.nu2});
  CHECK(all.size() == 16);
}

TEST_CASE("partition table") {
  const auto& t = char_partition_table();
  CHECK(t[6].to_string() == "(123)(456)");
  CHECK(t[0].to_string() == "(146)(235)");
  for (std::size_t k = 0; k < 10; ++k) {
    std::set<int> seen(t[k].first.begin(), t[k].first.end());
    seen.insert(t[k].second.begin(), t[k].second.end());
    CHECK(seen.size() == 6);
    // Each triple of odd characteristics sums to the even one.
    const auto& n = even_characteristics()[k];
    std::array<int, 4> expected{n.mu1, n.mu2, n.nu1, n.nu2};
    CHECK(char_sum(t[k].first) == expected);
    CHECK(char_sum(t[k].second) == expected);
    CHECK(partition_index(t[k]) == static_cast<int>(k) + 1);
  }
}

TEST_CASE("even theta expansions") {
  FourierSeries t1 = even_theta(1, 8);
  CHECK(t1.coefficient({0, 0, 0}) == GaussRat(1));
  CHECK(t1.coefficient({4, 0, 0}) == GaussRat(2));
  CHECK(t1.coefficient({0, 0, 4}) == GaussRat(2));
  CHECK(t1.coefficient({4, 4, 4}) == GaussRat(2));
  CHECK(t1.coefficient({4, -4, 4}) == GaussRat(2));
  // theta_5 = [01;00]: lowest terms come from a2 = 2 n2 + 1 = +-1.
  FourierSeries t5 = even_theta(5, 8);
  CHECK(t5.terms().front().first == FourierExp{0, 0, 1});
  CHECK(t5.coefficient({0, 0, 1}) == GaussRat(2));
  for (int i = 1; i <= 10; ++i) {
    FourierSeries t = even_theta(i, 16);
    for (const auto& [e, c] : t.terms()) {
      CHECK(e.e12 * e.e12 == e.e1 * e.e2);
      CHECK(c.is_real());
    }
  }
}

TEST_CASE("gradients") {
  auto g1 = gradient(1, 8);
  CHECK(g1.second.coefficient({0, 0, 1}) == GaussRat(0, 2));
  for (const auto& [e, c] : g1.first.terms()) CHECK(e.e1 != 0);
  for (int i = 1; i <= 6; ++i) {
    auto g = gradient(i, 16);
    for (const auto* s : {&g.first, &g.second}) {
      for (const auto& [e, c] : s->terms()) {
        CHECK(e.e12 * e.e12 == e.e1 * e.e2);
        CHECK(sgn(c.re()) == 0);
        CHECK(c.im().get_den() == 1);
      }
    }
  }
}

TEST_CASE("chi5") {
  FourierSeries c = chi5(12);
  CHECK(c.min_total_order() == 8);
  auto lead = c.slice(4, 4);
  REQUIRE(lead.size() == 2);
  CHECK(lead[0] == std::make_pair(-2, GaussRat(-1)));
  CHECK(lead[1] == std::make_pair(2, GaussRat(1)));
  for (const auto& [e, co] : c.terms()) {
    CHECK(co.re().get_den() == 1);
    CHECK(co.is_real());
    CHECK(e.e1 >= 4);
    CHECK(e.e2 >= 4);
  }
  FourierSeries c2 = series_mul(c, c);
  auto lead2 = c2.slice(8, 8);
  REQUIRE(lead2.size() == 3);
  CHECK(lead2[0].second == GaussRat(1));
  CHECK(lead2[1] == std::make_pair(0, GaussRat(-2)));
  CHECK(lead2[2].second == GaussRat(1));
}

TEST_CASE("pluecker forms") {
  const int n = 16;
  CHECK(pluecker_tilde(1, 2, n) == product_of_thetas({7, 8, 9, 10}, n));
  CHECK(pluecker_quadruple(1, 2) == std::array<int, 4>{7, 8, 9, 10});
  CHECK(pluecker_tilde(2, 1, n) == -pluecker_tilde(1, 2, n));
  try {
    pluecker_tilde(1, 1, n);
    FAIL("expected IdenticalIndices");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdenticalIndices);
  }
  FourierSeries rel = series_mul(pluecker_tilde(1, 3, n), pluecker_tilde(2, 4, n)) -
                      series_mul(pluecker_tilde(1, 4, n), pluecker_tilde(2, 3, n)) -
                      series_mul(pluecker_tilde(1, 2, n), pluecker_tilde(3, 4, n));
  CHECK(rel.is_zero());
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      FourierSeries p = pluecker_tilde(a, b, n);
      CHECK(p.is_semipositive());
      FourierSeries q = product_of_thetas(pluecker_quadruple(a, b), n);
      INFO("pair " << a << b);
      CHECK((p == q || p == -q));
      CHECK(p == q.scaled(GaussRat(pluecker_sign(a, b))));
      CHECK(pluecker_sign(b, a) == -pluecker_sign(a, b));
    }
  }
}
