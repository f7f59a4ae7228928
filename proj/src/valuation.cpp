#include "taut/valuation.hpp"

#include <algorithm>
#include <future>
#include <unordered_map>

#include "taut/error.hpp"

namespace taut {

namespace {

int require_uniform(const Covariant& c) {
  auto d = c.uniform_degree();
  if (!d) throw Error(ErrorCode::NonUniformDegree, "valuation needs equal degree in all six forms");
  return *d;
}

const mpz_class& binom(int n, int k) {
  static const std::vector<std::vector<mpz_class>> table = [] {
    std::vector<std::vector<mpz_class>> t(256);
    for (int i = 0; i < 256; ++i) {
      t[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(i) + 1, 1);
      for (int j = 1; j < i; ++j) {
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
            t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      }
    }
    return t;
  }();
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace

int shifted_t_degree(const SparsePoly& p, const std::array<int, 3>& triple, int shifted_coord) {
  if (p.is_zero()) return -1;
  const int other = 3 - shifted_coord;
  std::array<int, 3> sv{}, ov{};
  for (std::size_t k = 0; k < 3; ++k) {
    sv[k] = var::l(triple[k], shifted_coord);
    ov[k] = var::l(triple[k], other);
  }
  int top = 0;
  for (const auto& [m, c] : p.terms()) {
    top = std::max(top, m[sv[0]] + m[sv[1]] + m[sv[2]]);
  }
  // Collect the t^k part only, from the top down; most polynomials stop at once.
  for (int k = top; k >= 0; --k) {
    std::unordered_map<Monomial, GaussRat, MonomialHash> acc;
    for (const auto& [m, c] : p.terms()) {
      const int a0 = m[sv[0]], a1 = m[sv[1]], a2 = m[sv[2]];
      if (a0 + a1 + a2 < k) continue;
      Monomial base = m;
      for (int v : ov) base[v] = 0;
      for (int k0 = std::max(0, k - a1 - a2); k0 <= std::min(a0, k); ++k0) {
        for (int k1 = std::max(0, k - k0 - a2); k1 <= std::min(a1, k - k0); ++k1) {
          const int k2 = k - k0 - k1;
          Monomial r = base;
          r[sv[0]] = static_cast<std::uint8_t>(a0 - k0);
          r[sv[1]] = static_cast<std::uint8_t>(a1 - k1);
          r[sv[2]] = static_cast<std::uint8_t>(a2 - k2);
          mpz_class w = binom(a0, k0) * binom(a1, k1) * binom(a2, k2);
          acc[r] += c * GaussRat(mpq_class(w));
        }
      }
    }
    for (const auto& [m, c] : acc) {
      if (!c.is_zero()) return k;
    }
  }
  return -1;
}

int v_pi_poly(const SparsePoly& p, int d, const Partition6& pi) {
  if (p.is_zero()) return kValuationInfinity;
  // Per triple the two substitutions agree up to swapping x1, x2; the triples
  // do not, and the larger degree is the one the Fourier expansion sees.
  int best = -1;
  for (const auto* triple : {&pi.first, &pi.second}) {
    best = std::max(best, std::min(shifted_t_degree(p, *triple, 1), shifted_t_degree(p, *triple, 2)));
  }
  return 2 * d - best;
}

ValuationReport v_pi(const Covariant& c, const Partition6& pi) {
  const int d = require_uniform(c);
  ValuationReport r;
  r.partition = pi;
  for (const auto& pj : c.x_coefficients()) {
    r.values.push_back(v_pi_poly(pj, d, pi));
    r.aggregate = std::min(r.aggregate, r.values.back());
  }
  return r;
}

std::vector<ValuationReport> v_pi_all(const Covariant& c) {
  require_uniform(c);
  std::vector<std::future<ValuationReport>> jobs;
  for (const auto& pi : char_partition_table()) {
    jobs.push_back(std::async(std::launch::async, [&c, pi] { return v_pi(c, pi); }));
  }
  std::vector<ValuationReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool is_holomorphic(const Covariant& c) { return needed_chi5_power(c) == 0; }

int needed_chi5_power(const Covariant& c) {
  int worst = 0;
  for (const auto& r : v_pi_all(c)) worst = std::min(worst, r.aggregate);
  return -worst;
}

}  // namespace taut
