#pragma once

#include <array>
#include <string>
#include <utility>

#include "taut/fourier_series.hpp"

namespace taut {

/// Characteristic [mu1 mu2; nu1 nu2] with bits in {0, 1}.
struct ThetaCharacteristic {
  int mu1 = 0;
  int mu2 = 0;
  int nu1 = 0;
  int nu2 = 0;

  bool even() const { return (mu1 * nu1 + mu2 * nu2) % 2 == 0; }
  std::string to_string() const;
};

/// n1..n10 in lexicographic order.
const std::array<ThetaCharacteristic, 10>& even_characteristics();
/// m1..m6 in lexicographic order.
const std::array<ThetaCharacteristic, 6>& odd_characteristics();

/// Unordered pair of complementary triples of {1..6}; `first` contains 1 and
/// both triples are sorted.
struct Partition6 {
  std::array<int, 3> first{};
  std::array<int, 3> second{};

  static Partition6 from_triple(std::array<int, 3> triple);
  bool contains_pair_in_triple(int a, int b) const;
  /// Triple containing `i`.
  const std::array<int, 3>& triple_of(int i) const;
  std::string to_string() const;  // "(146)(235)"

  friend bool operator==(const Partition6&, const Partition6&) = default;
};

/// The ten partitions in the order of n1..n10.
const std::array<Partition6, 10>& char_partition_table();
/// 1-based index k with char_partition_table()[k-1] == p.
int partition_index(const Partition6& p);
/// The four even indices whose partition puts a and b in the same triple.
std::array<int, 4> pluecker_quadruple(int a, int b);
/// epsilon with p~_ab = epsilon * (product of the quadruple); antisymmetric in (a, b).
int pluecker_sign(int a, int b);

FourierSeries even_theta(int index, int box);
std::pair<FourierSeries, FourierSeries> gradient(int index, int box);
FourierSeries chi5(int box);
FourierSeries pluecker_tilde(int a, int b, int box);

}  // namespace taut
