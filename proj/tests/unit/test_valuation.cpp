#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "taut/error.hpp"
#include "taut/valuation.hpp"

using namespace taut;
using namespace corpus;

namespace {

// Naive oracle: run the substitution through SparsePoly::substitute and read
// off the t-degree.
int naive_v(const SparsePoly& p, int d, const Partition6& pi) {
  if (p.is_zero()) return kValuationInfinity;
  const SparsePoly t = SparsePoly::variable(var::t);
  int best = -1;
  for (const auto* triple : {&pi.first, &pi.second}) {
    int inner = 1 << 20;
    for (int shifted : {1, 2}) {
      std::vector<std::pair<int, SparsePoly>> images;
      for (int i : *triple) {
        images.emplace_back(var::l(i, shifted), SparsePoly::variable(var::l(i, shifted)) + t);
        images.emplace_back(var::l(i, 3 - shifted), SparsePoly(1));
      }
      inner = std::min(inner, p.substitute(images).degree(var::t));
    }
    best = std::max(best, inner);
  }
  return 2 * d - best;
}

std::vector<int> values_all(const Covariant& c, const Partition6& pi) { return v_pi(c, pi).values; }

}  // namespace

TEST_CASE("universal sextic") {
  const std::vector<int> expected{2, 1, 0, -1, 0, 1, 2};
  for (const auto& r : v_pi_all(universal_sextic())) {
    CHECK(r.values == expected);
    CHECK(r.aggregate == -1);
  }
  CHECK_FALSE(is_holomorphic(universal_sextic()));
  CHECK(needed_chi5_power(universal_sextic()) == 1);
}

TEST_CASE("discriminant root and six-p monomials") {
  for (const auto& r : v_pi_all(discriminant_root())) CHECK(r.values == std::vector<int>{1});
  CHECK(is_holomorphic(discriminant_root()));
  CHECK(needed_chi5_power(discriminant_root()) == 0);
  const auto& table = char_partition_table();
  for (const auto& a : table) {
    for (const auto& b : table) CHECK(v_pi(six_p_monomial(a), b).aggregate == (a == b ? 4 : 0));
  }
  CHECK(is_holomorphic(discriminant_root() * universal_sextic()));
}

TEST_CASE("quintic times linear covariant") {
  Covariant c = quintic_linear_split();
  for (const auto& r : v_pi_all(c)) CHECK(r.values == std::vector<int>{-1, -2, -1});
  CHECK(needed_chi5_power(c) == 2);
}

TEST_CASE("agrees with direct substitution") {
  std::vector<Covariant> corpus_list = {universal_sextic(), quintic_linear_split(), mono("p12 l3 l4 l5 l6"),
                                        quadric_invariant_split()};
  for (int k : {1, 6, 12, 16, 24, 28}) corpus_list.push_back(c26(k));
  for (const auto& c : corpus_list) {
    const int d = *c.uniform_degree();
    for (const auto& pi : char_partition_table()) {
      auto report = v_pi(c, pi);
      auto coeffs = c.x_coefficients();
      for (std::size_t j = 0; j < coeffs.size(); ++j) CHECK(report.values[j] == naive_v(coeffs[j], d, pi));
    }
  }
}

TEST_CASE("multiplying by the discriminant root adds one") {
  for (int k : {1, 4, 6, 11, 16, 22, 25, 28}) {
    Covariant c = c26(k);
    Covariant ic = discriminant_root() * c;
    for (const auto& pi : char_partition_table()) {
      auto a = values_all(c, pi);
      auto b = values_all(ic, pi);
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == kValuationInfinity) {
          CHECK(b[j] == kValuationInfinity);
        } else {
          CHECK(b[j] == a[j] + 1);
        }
      }
    }
  }
}

TEST_CASE("S6 equivariance") {
  std::vector<Perm6> perms = {Perm6{2, 1, 3, 4, 5, 6}, Perm6{2, 3, 4, 5, 6, 1}, Perm6{4, 6, 1, 5, 3, 2}};
  for (int k : {3, 7, 12, 21, 28}) {
    Covariant c = c26(k);
    for (const auto& s : perms) {
      for (const auto& pi : char_partition_table()) {
        Partition6 moved = Partition6::from_triple({s[static_cast<std::size_t>(pi.first[0] - 1)],
                                                    s[static_cast<std::size_t>(pi.first[1] - 1)],
                                                    s[static_cast<std::size_t>(pi.first[2] - 1)]});
        CHECK(v_pi(s6_act(s, c), moved).values == v_pi(c, pi).values);
      }
    }
  }
}

TEST_CASE("the two triples can disagree") {
  // C6 is one covariant where they do.
  const Covariant c = c26(6);
  int differing = 0;
  for (const auto& pi : char_partition_table()) {
    for (const auto& pj : c.x_coefficients()) {
      if (pj.is_zero()) continue;
      const int first = std::min(shifted_t_degree(pj, pi.first, 1), shifted_t_degree(pj, pi.first, 2));
      const int second = std::min(shifted_t_degree(pj, pi.second, 1), shifted_t_degree(pj, pi.second, 2));
      if (first != second) ++differing;
    }
  }
  CHECK(differing > 0);
}

TEST_CASE("zero coefficient and errors") {
  CHECK(v_pi_poly(SparsePoly(), 1, char_partition_table()[0]) == kValuationInfinity);
  Covariant uneven = linear_form(1) * linear_form(2);
  try {
    v_pi(uneven, char_partition_table()[0]);
    FAIL("expected NonUniformDegree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUniformDegree);
  }
}
