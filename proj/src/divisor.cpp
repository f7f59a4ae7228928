#include "taut/divisor.hpp"

#include "taut/covariant.hpp"
#include "taut/error.hpp"

namespace taut {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  h += o.h;
  lambda += o.lambda;
  for (std::size_t k = 0; k < D.size(); ++k) D[k] += o.D[k];
  return *this;
}

DivisorClass DivisorClass::scaled(const mpq_class& c) const {
  DivisorClass r = *this;
  r.h *= c;
  r.lambda *= c;
  for (auto& x : r.D) x *= c;
  return r;
}

DivisorClass class_W(int i) {
  if (i < 1 || i > 6) throw Error(ErrorCode::InvalidArgument, "W_i needs 1 <= i <= 6");
  DivisorClass w{1, mpq_class(1, 2), {}};
  for (int k = 0; k < 15; ++k) {
    auto [a, b] = pair_of(k);
    if (a != i && b != i) w.D[static_cast<std::size_t>(k)] = mpq_class(-1, 4);
  }
  return w;
}

DivisorClass class_H(const Partition6& pi) {
  DivisorClass c{0, mpq_class(1, 2), {}};
  for (const auto* t : {&pi.first, &pi.second}) {
    const auto& x = *t;
    for (auto [a, b] : {std::pair{x[0], x[1]}, {x[0], x[2]}, {x[1], x[2]}}) {
      c.D[static_cast<std::size_t>(pair_index(a, b))] = mpq_class(-1, 4);
    }
  }
  return c;
}

DivisorClass delta0() {
  DivisorClass c{0, 0, {}};
  for (auto& x : c.D) x = 1;
  return c;
}

FormData divisor_to_form(const std::array<int, 10>& c, const std::array<int, 6>& d) {
  for (int x : c) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "divisor multiplicities must be non-negative");
  }
  for (int x : d) {
    if (x < 0) throw Error(ErrorCode::InvalidArgument, "divisor multiplicities must be non-negative");
  }
  DivisorClass f{0, 0, {}};
  const auto& table = char_partition_table();
  for (std::size_t p = 0; p < 10; ++p) f += class_H(table[p]).scaled(c[p]);
  for (int i = 1; i <= 6; ++i) f += class_W(i).scaled(d[static_cast<std::size_t>(i - 1)]);

  FormData out;
  out.j = f.h;
  out.k = f.lambda;
  bool ok = out.j.get_den() == 1 && out.k.get_den() == 1;
  for (std::size_t k = 0; k < 15; ++k) {
    out.r[k] = -f.D[k];
    if (out.r[k] < 0 || out.r[k].get_den() != 1) ok = false;
  }
  out.admissible = ok;
  return out;
}

}  // namespace taut
