#include "taut/theta.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "taut/error.hpp"

namespace taut {

std::string ThetaCharacteristic::to_string() const {
  return "[" + std::to_string(mu1) + std::to_string(mu2) + ";" + std::to_string(nu1) + std::to_string(nu2) + "]";
}

const std::array<ThetaCharacteristic, 10>& even_characteristics() {
  static const std::array<ThetaCharacteristic, 10> table = {{
      {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0},
      {0, 1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 1, 1},
  }};
  return table;
}

const std::array<ThetaCharacteristic, 6>& odd_characteristics() {
  static const std::array<ThetaCharacteristic, 6> table = {{
      {0, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0},
  }};
  return table;
}

Partition6 Partition6::from_triple(std::array<int, 3> triple) {
  std::sort(triple.begin(), triple.end());
  std::array<int, 3> rest{};
  int k = 0;
  for (int i = 1; i <= 6; ++i) {
    if (std::find(triple.begin(), triple.end(), i) == triple.end()) {
      if (k == 3) throw Error(ErrorCode::InvalidArgument, "triple must consist of three distinct indices in 1..6");
      rest[static_cast<std::size_t>(k++)] = i;
    }
  }
  if (k != 3 || triple[0] < 1 || triple[2] > 6) {
    throw Error(ErrorCode::InvalidArgument, "triple must consist of three distinct indices in 1..6");
  }
  Partition6 p;
  if (triple[0] == 1) {
    p.first = triple;
    p.second = rest;
  } else {
    p.first = rest;
    p.second = triple;
  }
  return p;
}

const std::array<int, 3>& Partition6::triple_of(int i) const {
  return std::find(first.begin(), first.end(), i) != first.end() ? first : second;
}

bool Partition6::contains_pair_in_triple(int a, int b) const {
  const auto& t = triple_of(a);
  return std::find(t.begin(), t.end(), b) != t.end();
}

std::string Partition6::to_string() const {
  std::string s = "(";
  for (int v : first) s += std::to_string(v);
  s += ")(";
  for (int v : second) s += std::to_string(v);
  return s + ")";
}

const std::array<Partition6, 10>& char_partition_table() {
  static const std::array<Partition6, 10> table = [] {
    const std::array<std::array<int, 3>, 10> firsts = {{
        {1, 4, 6}, {1, 3, 6}, {1, 3, 5}, {1, 4, 5}, {1, 3, 4},
        {1, 5, 6}, {1, 2, 3}, {1, 2, 4}, {1, 2, 6}, {1, 2, 5},
    }};
    std::array<Partition6, 10> t;
    for (std::size_t k = 0; k < 10; ++k) t[k] = Partition6::from_triple(firsts[k]);
    return t;
  }();
  return table;
}

int partition_index(const Partition6& p) {
  const auto& table = char_partition_table();
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k] == p) return static_cast<int>(k) + 1;
  }
  throw Error(ErrorCode::InvalidArgument, "not a partition of {1..6} into two triples");
}

std::array<int, 4> pluecker_quadruple(int a, int b) {
  if (a == b) throw Error(ErrorCode::IdenticalIndices, "indices must differ");
  std::array<int, 4> out{};
  std::size_t k = 0;
  const auto& table = char_partition_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].contains_pair_in_triple(a, b)) out[k++] = static_cast<int>(i) + 1;
  }
  return out;
}

int pluecker_sign(int a, int b) {
  if (a == b) throw Error(ErrorCode::IdenticalIndices, "indices must differ");
  if (a > b) return -pluecker_sign(b, a);
  static const std::array<int, 5> minus = {15, 25, 34, 35, 45};
  return std::find(minus.begin(), minus.end(), 10 * a + b) != minus.end() ? -1 : 1;
}

namespace {

enum class Kind { Even, Grad1, Grad2, Chi5, Ptilde };

std::mutex g_memo_mutex;
std::map<std::tuple<Kind, int, int>, FourierSeries>& memo() {
  static std::map<std::tuple<Kind, int, int>, FourierSeries> m;
  return m;
}

template <class F>
FourierSeries memoized(Kind kind, int index, int box, F&& compute) {
  const auto key = std::make_tuple(kind, index, box);
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = memo().find(key);
    if (it != memo().end()) return it->second;
  }
  FourierSeries s = compute();
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  memo().emplace(key, s);
  return s;
}

// Odd integers a with parity mu and a^2 <= box, paired with n = (a - mu)/2.
std::vector<std::pair<int, int>> lattice_axis(int mu, int box) {
  std::vector<std::pair<int, int>> out;
  const int bound = static_cast<int>(std::sqrt(static_cast<double>(std::max(box, 0)))) + 1;
  for (int a = -bound; a <= bound; ++a) {
    if (((a - mu) % 2 + 2) % 2 != 0 || a * a > box) continue;
    out.emplace_back(a, (a - mu) / 2);
  }
  return out;
}

// weight 0: plain theta; weight j in {1,2}: factor (2n_j + mu_j).
FourierSeries theta_sum(const ThetaCharacteristic& c, int box, int weight) {
  std::vector<FourierTerm> terms;
  const int unit = (c.mu1 * c.nu1 + c.mu2 * c.nu2) % 4;
  for (const auto& [a1, n1] : lattice_axis(c.mu1, box)) {
    for (const auto& [a2, n2] : lattice_axis(c.mu2, box)) {
      long v = ((n1 * c.nu1 + n2 * c.nu2) % 2 == 0) ? 1 : -1;
      if (weight == 1) v *= a1;
      if (weight == 2) v *= a2;
      if (v == 0) continue;
      // i^unit with unit in {0,1,2,3}
      GaussRat coef = (unit % 2 == 0) ? GaussRat(unit == 0 ? v : -v) : GaussRat(0, unit == 1 ? v : -v);
      terms.emplace_back(FourierExp{a1 * a1, a1 * a2, a2 * a2}, std::move(coef));
    }
  }
  return FourierSeries::from_terms(box, 0, 0, std::move(terms));
}

void check_index(int index, int count) {
  if (index < 1 || index > count) {
    throw Error(ErrorCode::InvalidArgument, "index " + std::to_string(index) + " out of range 1.." +
                                                std::to_string(count));
  }
}

}  // namespace

FourierSeries even_theta(int index, int box) {
  check_index(index, 10);
  return memoized(Kind::Even, index, box, [&] {
    return theta_sum(even_characteristics()[static_cast<std::size_t>(index - 1)], box, 0);
  });
}

std::pair<FourierSeries, FourierSeries> gradient(int index, int box) {
  check_index(index, 6);
  const auto& c = odd_characteristics()[static_cast<std::size_t>(index - 1)];
  return {memoized(Kind::Grad1, index, box, [&] { return theta_sum(c, box, 1); }),
          memoized(Kind::Grad2, index, box, [&] { return theta_sum(c, box, 2); })};
}

FourierSeries chi5(int box) {
  return memoized(Kind::Chi5, 0, box, [&] {
    FourierSeries p = even_theta(1, box);
    for (int i = 2; i <= 10; ++i) p = series_mul(p, even_theta(i, box));
    return p.scaled(GaussRat::rational(-1, 64));
  });
}

FourierSeries pluecker_tilde(int a, int b, int box) {
  if (a == b) throw Error(ErrorCode::IdenticalIndices, "p~ needs two different indices");
  check_index(a, 6);
  check_index(b, 6);
  if (a > b) return -pluecker_tilde(b, a, box);
  return memoized(Kind::Ptilde, 10 * a + b, box, [&] {
    auto ga = gradient(a, box);
    auto gb = gradient(b, box);
    return series_mul(ga.first, gb.second) - series_mul(ga.second, gb.first);
  });
}

}  // namespace taut
