#include <doctest.h>

#include "taut/covariant.hpp"
#include "taut/divisor.hpp"

using namespace taut;

namespace {

std::array<int, 10> c_of(std::initializer_list<std::pair<std::array<int, 3>, int>> parts) {
  std::array<int, 10> c{};
  for (const auto& [t, mult] : parts) c[static_cast<std::size_t>(partition_index(Partition6::from_triple(t)) - 1)] += mult;
  return c;
}

mpq_class r_of(const FormData& f, int a, int b) { return f.r[static_cast<std::size_t>(pair_index(a, b))]; }

// r_ab straight from the defining sum over the four partitions joining a and b.
mpq_class r_oracle(const std::array<int, 10>& c, const std::array<int, 6>& d, int a, int b) {
  mpq_class s = 0;
  const auto& table = char_partition_table();
  for (std::size_t p = 0; p < 10; ++p) {
    if (table[p].contains_pair_in_triple(a, b)) s += c[p];
  }
  for (int i = 1; i <= 6; ++i) {
    if (i != a && i != b) s += d[static_cast<std::size_t>(i - 1)];
  }
  return s / 4;
}

}  // namespace

TEST_CASE("Weierstrass and product-locus classes") {
  CHECK(class_W(1).D[static_cast<std::size_t>(pair_index(2, 3))] == mpq_class(-1, 4));
  CHECK(class_W(1).D[static_cast<std::size_t>(pair_index(1, 2))] == 0);
  DivisorClass sum{0, 0, {}};
  for (int i = 1; i <= 6; ++i) sum += class_W(i);
  CHECK(sum == DivisorClass{6, 3, {}} + delta0().scaled(-1));
  Partition6 p = Partition6::from_triple({1, 2, 3});
  CHECK(class_H(p).lambda == mpq_class(1, 2));
  mpq_class d12 = 0;
  DivisorClass all{0, 0, {}};
  for (const auto& pi : char_partition_table()) {
    d12 += 4 * class_H(pi).D[0];
    all += class_H(pi);
  }
  CHECK(d12 == -4);
  CHECK(all + delta0() == DivisorClass{0, 5, {}});
}

TEST_CASE("the two worked divisors") {
  auto first = divisor_to_form(
      c_of({{{1, 4, 6}, 1}, {{1, 3, 6}, 1}, {{1, 3, 5}, 1}, {{1, 4, 5}, 1}, {{1, 3, 4}, 1}, {{1, 5, 6}, 1}}),
      {1, 1, 0, 0, 0, 0});
  CHECK(first.j == 2);
  CHECK(first.k == 4);
  CHECK(first.admissible);
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) CHECK(r_of(first, a, b) == (a == 1 && b == 2 ? 0 : 1));
  }
  // The class 6h + 4 lambda - delta0 - (D45 + D46 + D56): (j, k) = (6, 4).
  auto second = divisor_to_form(c_of({{{1, 2, 3}, 2}}), {2, 2, 2, 0, 0, 0});
  CHECK(second.j == 6);
  CHECK(second.k == 4);
  CHECK(second.admissible);
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) CHECK(r_of(second, a, b) == (a >= 4 ? 2 : 1));
  }
}

TEST_CASE("edge cases and linearity") {
  auto zero = divisor_to_form({}, {});
  CHECK(zero.j == 0);
  CHECK(zero.k == 0);
  CHECK(zero.admissible);
  for (const auto& r : zero.r) CHECK(r == 0);
  auto w = divisor_to_form({}, {1, 1, 1, 1, 1, 1});
  CHECK(w.j == 6);
  CHECK(w.k == 3);
  for (const auto& r : w.r) CHECK(r == 1);
  auto single = divisor_to_form({}, {1, 0, 0, 0, 0, 0});
  CHECK_FALSE(single.admissible);

  std::array<int, 10> c1{1, 0, 2, 0, 0, 1, 0, 3, 0, 0}, c2{0, 2, 0, 1, 1, 0, 0, 0, 2, 1};
  std::array<int, 6> d1{1, 0, 0, 2, 0, 1}, d2{0, 3, 1, 0, 1, 0};
  std::array<int, 10> cs{};
  std::array<int, 6> ds{};
  for (std::size_t i = 0; i < 10; ++i) cs[i] = c1[i] + c2[i];
  for (std::size_t i = 0; i < 6; ++i) ds[i] = d1[i] + d2[i];
  auto a = divisor_to_form(c1, d1), b = divisor_to_form(c2, d2), s = divisor_to_form(cs, ds);
  CHECK(s.j == a.j + b.j);
  CHECK(2 * s.k == 2 * a.k + 2 * b.k);
  for (int x = 1; x <= 6; ++x) {
    for (int y = x + 1; y <= 6; ++y) {
      CHECK(4 * r_of(s, x, y) == 4 * r_of(a, x, y) + 4 * r_of(b, x, y));
      CHECK(r_of(s, x, y) == r_oracle(cs, ds, x, y));
    }
  }
}
