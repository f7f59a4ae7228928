#pragma once

#include <array>

#include <gmpxx.h>

#include "taut/theta.hpp"

namespace taut {

/// h + lambda + sum D_ij with rational coefficients; D indexed by pair_index.
struct DivisorClass {
  mpq_class h;
  mpq_class lambda;
  std::array<mpq_class, 15> D;

  DivisorClass& operator+=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  DivisorClass scaled(const mpq_class& c) const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass class_W(int i);
DivisorClass class_H(const Partition6& pi);
/// sum_{i<j} D_ij.
DivisorClass delta0();

struct FormData {
  mpq_class j;
  mpq_class k;
  std::array<mpq_class, 15> r;  // vanishing order along D_ab, by pair_index
  bool admissible = false;
};

/// c is indexed like char_partition_table(), d by the six Weierstrass divisors.
FormData divisor_to_form(const std::array<int, 10>& c, const std::array<int, 6>& d);

}  // namespace taut
