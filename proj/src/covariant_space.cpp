#include "taut/covariant_space.hpp"

#include <functional>

#include "taut/error.hpp"

namespace taut {

namespace {

void axpy(std::vector<GaussRat>& y, const GaussRat& a, const std::vector<GaussRat>& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] -= a * x[i];
  }
}

const std::array<Perm6, 2>& s6_generators() {
  static const std::array<Perm6, 2> gens = {Perm6{2, 1, 3, 4, 5, 6}, Perm6{2, 3, 4, 5, 6, 1}};
  return gens;
}

}  // namespace

void CovariantSpace::add(const Covariant& c) {
  SparsePoly v = c.poly();
  std::vector<GaussRat> t(basis_.size() + 1);
  t[basis_.size()] = GaussRat(1);
  for (const auto& [pivot, k] : pivot_index_) {
    GaussRat coef = v.coefficient(pivot);
    if (coef.is_zero()) continue;
    v -= rows_[k].scaled(coef);
    axpy(t, coef, transform_[k]);
  }
  if (v.is_zero()) return;
  GaussRat inv = v.terms().front().second.inverse();
  v = v.scaled(inv);
  for (auto& x : t) x *= inv;
  pivot_index_.emplace(v.terms().front().first, rows_.size());
  pivots_.push_back(v.terms().front().first);
  rows_.push_back(std::move(v));
  transform_.push_back(std::move(t));
  basis_.push_back(c);
  finalized_ = false;
}

void CovariantSpace::finalize() {
  if (finalized_) return;
  for (auto& t : transform_) t.resize(basis_.size());
  // Back-substitute from the largest pivot down.
  std::vector<std::size_t> done;
  for (auto it = pivot_index_.rbegin(); it != pivot_index_.rend(); ++it) {
    const std::size_t i = it->second;
    std::vector<std::pair<std::size_t, GaussRat>> hits;
    for (std::size_t j : done) {
      GaussRat coef = rows_[i].coefficient(pivots_[j]);
      if (!coef.is_zero()) hits.emplace_back(j, coef);
    }
    for (const auto& [j, coef] : hits) {
      rows_[i] -= rows_[j].scaled(coef);
      axpy(transform_[i], coef, transform_[j]);
    }
    done.push_back(i);
  }
  finalized_ = true;
}

CovariantSpace CovariantSpace::span(std::span<const Covariant> spanning) {
  CovariantSpace s;
  for (const auto& c : spanning) s.add(c);
  s.finalize();
  return s;
}

CovariantSpace CovariantSpace::orbit_span(std::span<const Covariant> seeds) {
  CovariantSpace s;
  for (const auto& c : seeds) s.add(c);
  // Close under the two generators of S6.
  for (std::size_t k = 0; k < s.basis_.size(); ++k) {
    for (const auto& g : s6_generators()) {
      Covariant image = s6_act(g, s.basis_[k]);
      s.add(image);
    }
  }
  s.finalize();
  return s;
}

std::vector<GaussRat> CovariantSpace::pivot_coefficients(const SparsePoly& w) const {
  std::vector<GaussRat> c;
  c.reserve(pivots_.size());
  for (const auto& p : pivots_) c.push_back(w.coefficient(p));
  return c;
}

std::optional<std::vector<GaussRat>> CovariantSpace::row_coordinates(const SparsePoly& w) const {
  auto c = pivot_coefficients(w);
  SparsePoly r = w;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) r -= rows_[k].scaled(c[k]);
  }
  if (!r.is_zero()) return std::nullopt;
  return c;
}

std::optional<std::vector<GaussRat>> CovariantSpace::basis_coordinates(const SparsePoly& w) const {
  auto c = row_coordinates(w);
  if (!c) return std::nullopt;
  std::vector<GaussRat> out(basis_.size());
  for (std::size_t k = 0; k < c->size(); ++k) {
    if ((*c)[k].is_zero()) continue;
    for (std::size_t j = 0; j < basis_.size(); ++j) out[j] += (*c)[k] * transform_[k][j];
  }
  return out;
}

Covariant CovariantSpace::row_combination(std::span<const GaussRat> c) const {
  if (c.size() != rows_.size()) throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  SparsePoly poly;
  std::vector<GaussRat> onbasis(basis_.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    poly += rows_[k].scaled(c[k]);
    for (std::size_t j = 0; j < basis_.size(); ++j) onbasis[j] += c[k] * transform_[k][j];
  }
  std::optional<GenExpr> gen = GenExpr{};
  for (std::size_t j = 0; j < basis_.size() && gen; ++j) {
    if (onbasis[j].is_zero()) continue;
    if (!basis_[j].gen()) {
      gen.reset();
      break;
    }
    gen = gen_add(*gen, *basis_[j].gen(), onbasis[j]);
  }
  Grading g = basis_.empty() ? Grading{} : basis_[0].grading();
  return Covariant(std::move(poly), g, std::move(gen));
}

Covariant CovariantSpace::with_structure(const Covariant& c) const {
  auto coords = row_coordinates(c.poly());
  if (!coords) throw Error(ErrorCode::InvalidArgument, "covariant is not in the space");
  return row_combination(*coords);
}

std::vector<GenMonomial> generator_monomials(int d, int b) {
  std::vector<GenMonomial> out;
  if ((6 * d - b) % 2 != 0 || 6 * d < b) return out;
  const int edges = (6 * d - b) / 2;
  GenMonomial m;
  std::array<int, 6> deg{};
  std::function<void(int, int)> rec = [&](int k, int remaining) {
    if (k == 15) {
      if (remaining != 0) return;
      GenMonomial r = m;
      for (int i = 0; i < 6; ++i) r.l[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d - deg[static_cast<std::size_t>(i)]);
      out.push_back(r);
      return;
    }
    auto [a, bb] = pair_of(k);
    for (int e = 0; e <= remaining; ++e) {
      if (deg[static_cast<std::size_t>(a - 1)] + e > d || deg[static_cast<std::size_t>(bb - 1)] + e > d) break;
      deg[static_cast<std::size_t>(a - 1)] += e;
      deg[static_cast<std::size_t>(bb - 1)] += e;
      m.p[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(e);
      rec(k + 1, remaining - e);
      deg[static_cast<std::size_t>(a - 1)] -= e;
      deg[static_cast<std::size_t>(bb - 1)] -= e;
    }
    m.p[static_cast<std::size_t>(k)] = 0;
  };
  rec(0, edges);
  return out;
}

CovariantSpace space_basis(int d, int b) {
  const bool ok = d >= 0 && b >= 0 && ((d <= 3 && b <= 10) || (d == 4 && b == 0));
  if (!ok) {
    throw Error(ErrorCode::TooLarge, "C'_{" + std::to_string(d) + "," + std::to_string(b) +
                                         "} is outside the supported range d <= 3, b <= 10");
  }
  std::vector<Covariant> gens;
  for (const auto& m : generator_monomials(d, b)) gens.push_back(Covariant::from_gen({{m, GaussRat(1)}}));
  return CovariantSpace::span(gens);
}

}  // namespace taut
