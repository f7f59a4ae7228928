#pragma once

#include <limits>
#include <vector>

#include "taut/covariant.hpp"
#include "taut/theta.hpp"

namespace taut {

/// Stands for +infinity (the valuation of a vanishing coefficient).
inline constexpr int kValuationInfinity = std::numeric_limits<int>::max();

struct ValuationReport {
  Partition6 partition;
  std::vector<int> values;  // one per x-coefficient P_0..P_b
  int aggregate = kValuationInfinity;
};

/// Top t-degree of P after l_{i,c} -> l_{i,c} + t and l_{i,3-c} -> 1 for every i in
/// the triple; -1 when P vanishes.
int shifted_t_degree(const SparsePoly& p, const std::array<int, 3>& triple, int shifted_coord);

/// 2d minus the t-degree of P, taking the smaller degree of the two substitutions
/// for each triple and the larger of the two triples.
int v_pi_poly(const SparsePoly& p, int d, const Partition6& pi);

ValuationReport v_pi(const Covariant& c, const Partition6& pi);
/// Reports for the ten partitions in table order.
std::vector<ValuationReport> v_pi_all(const Covariant& c);
bool is_holomorphic(const Covariant& c);
int needed_chi5_power(const Covariant& c);

}  // namespace taut
