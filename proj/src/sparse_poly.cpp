#include "taut/sparse_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "taut/error.hpp"

namespace taut {

namespace var {
namespace {
const std::array<std::string, kCount>& names() {
  static const std::array<std::string, kCount> table = [] {
    std::array<std::string, kCount> n;
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 2; ++j) n[l(i, j)] = "l" + std::to_string(i) + std::to_string(j);
    }
    n[x1] = "x1";
    n[x2] = "x2";
    n[t] = "t";
    for (int k = 0; k <= 6; ++k) n[f6_first + k] = "a" + std::to_string(k);
    for (int k = 0; k <= 5; ++k) n[f5_first + k] = "e" + std::to_string(k);
    for (int k = 0; k <= 1; ++k) n[lin_first + k] = "u" + std::to_string(k);
    for (int k = 0; k <= 2; ++k) {
      n[q1_first + k] = "qa" + std::to_string(k);
      n[q2_first + k] = "qb" + std::to_string(k);
      n[q3_first + k] = "qc" + std::to_string(k);
    }
    return n;
  }();
  return table;
}
}  // namespace

std::string_view name(int index) { return names().at(static_cast<std::size_t>(index)); }

std::optional<int> index_of(std::string_view n) {
  const auto& table = names();
  for (int i = 0; i < kCount; ++i) {
    if (table[static_cast<std::size_t>(i)] == n) return i;
  }
  return std::nullopt;
}
}  // namespace var

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    unsigned s = unsigned{exp[i]} + unsigned{other.exp[i]};
    if (s > 255) throw Error(ErrorCode::TooLarge, "monomial exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = static_cast<std::uint8_t>(exp[i] - other.exp[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < m.exp.size(); i += 8) {
    std::uint64_t w = 0;
    for (std::size_t k = 0; k < 8; ++k) w |= std::uint64_t{m.exp[i + k]} << (8 * k);
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

SparsePoly::SparsePoly(const GaussRat& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial{}, c);
}

SparsePoly SparsePoly::variable(int v, int exponent) {
  Monomial m;
  m[v] = static_cast<std::uint8_t>(exponent);
  return monomial(m, GaussRat(1));
}

SparsePoly SparsePoly::monomial(const Monomial& m, const GaussRat& c) {
  SparsePoly p;
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

SparsePoly SparsePoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  SparsePoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

GaussRat SparsePoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return GaussRat(0);
}

namespace {
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      GaussRat c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const SparsePoly& small = a.size() <= b.size() ? a : b;
  const SparsePoly& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    const auto& [m, c] = small.terms_[0];
    SparsePoly r;
    r.terms_.reserve(large.size());
    for (const auto& [lm, lc] : large.terms_) r.terms_.emplace_back(lm * m, lc * c);
    return r;  // multiplication by a monomial preserves the order
  }
  std::unordered_map<Monomial, GaussRat, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 16);
  for (const auto& [am, ac] : small.terms_) {
    for (const auto& [bm, bc] : large.terms_) acc[am * bm] += ac * bc;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.first < y.first; });
  SparsePoly r;
  r.terms_ = std::move(terms);
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) {
  *this = *this * o;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SparsePoly SparsePoly::scaled(const GaussRat& c) const {
  if (c.is_zero()) return {};
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result(1);
  SparsePoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

int SparsePoly::degree(int v) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int{t.first[v]});
  return d;
}

std::optional<int> SparsePoly::homogeneous_degree(std::span<const int> vars) const {
  std::optional<int> deg;
  for (const auto& t : terms_) {
    int d = 0;
    for (int v : vars) d += t.first[v];
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

SparsePoly SparsePoly::derivative(int v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    if (m[v] == 0) continue;
    Monomial dm = m;
    dm[v] = static_cast<std::uint8_t>(m[v] - 1);
    out.emplace_back(dm, c * GaussRat(long{m[v]}));
  }
  SparsePoly r;
  r.terms_ = std::move(out);  // lowering one exponent keeps distinct monomials ordered
  return r;
}

SparsePoly SparsePoly::substitute(std::span<const std::pair<int, SparsePoly>> images) const {
  // Cache of powers per substituted variable.
  std::vector<std::vector<SparsePoly>> powers(images.size());
  auto power = [&](std::size_t k, int e) -> const SparsePoly& {
    auto& list = powers[k];
    if (list.empty()) list.emplace_back(1);
    while (static_cast<int>(list.size()) <= e) list.push_back(list.back() * images[k].second);
    return list[static_cast<std::size_t>(e)];
  };
  std::unordered_map<Monomial, GaussRat, MonomialHash> acc;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    SparsePoly factor(c);
    for (std::size_t k = 0; k < images.size(); ++k) {
      int v = images[k].first;
      int e = rest[v];
      if (e == 0) continue;
      rest[v] = 0;
      factor = factor * power(k, e);
    }
    for (const auto& [fm, fc] : factor.terms()) acc[fm * rest] += fc;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.emplace_back(m, std::move(c));
  return from_terms(std::move(terms));
}

SparsePoly SparsePoly::rename(const std::array<int, var::kCount>& perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (int v = 0; v < var::kCount; ++v) r[perm[static_cast<std::size_t>(v)]] = m[v];
    out.emplace_back(r, c);
  }
  return from_terms(std::move(out));
}

std::vector<SparsePoly> SparsePoly::x_coefficients(int b) const {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(b + 1));
  for (const auto& [m, c] : terms_) {
    if (m[var::x1] + m[var::x2] != b) {
      throw Error(ErrorCode::Grading, "polynomial is not of order " + std::to_string(b) + " in x1, x2");
    }
    Monomial r = m;
    r[var::x1] = 0;
    r[var::x2] = 0;
    parts[m[var::x2]].emplace_back(r, c);
  }
  std::vector<SparsePoly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(from_terms(std::move(p)));
  return out;
}

SparsePoly SparsePoly::from_x_coefficients(std::span<const SparsePoly> coeffs) {
  const int b = static_cast<int>(coeffs.size()) - 1;
  std::vector<Term> all;
  for (int j = 0; j <= b; ++j) {
    for (const auto& [m, c] : coeffs[static_cast<std::size_t>(j)].terms()) {
      Monomial r = m;
      r[var::x1] = static_cast<std::uint8_t>(r[var::x1] + b - j);
      r[var::x2] = static_cast<std::uint8_t>(r[var::x2] + j);
      all.emplace_back(r, c);
    }
  }
  return from_terms(std::move(all));
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string coeff = c.to_string();
    bool complex = !c.is_real() && sgn(c.re()) != 0;
    bool negative = !complex && coeff[0] == '-';
    if (!first) os << (negative ? " - " : " + ");
    else if (negative) os << "-";
    if (negative) coeff.erase(0, 1);
    bool unit = coeff == "1";
    bool is_const = m == Monomial{};
    if (complex) os << "(" << coeff << ")";
    else if (!unit || is_const) os << coeff;
    bool need_star = !unit || complex;
    for (int v = 0; v < var::kCount; ++v) {
      if (m[v] == 0) continue;
      if (need_star) os << "*";
      os << var::name(v);
      if (m[v] > 1) os << "^" << int{m[v]};
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

SparsePoly poly_exact_div(const SparsePoly& a, const SparsePoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  std::map<Monomial, GaussRat> rem;
  for (const auto& [m, c] : a.terms()) rem.emplace(m, c);
  const auto& [lead_m, lead_c] = b.leading_term();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    if (!lead_m.divides(top->first)) {
      throw Error(ErrorCode::NotDivisible, "leading term not divisible");
    }
    Monomial qm = top->first / lead_m;
    GaussRat qc = top->second / lead_c;
    for (const auto& [bm, bc] : b.terms()) {
      Monomial m = bm * qm;
      auto [it, inserted] = rem.try_emplace(m, GaussRat(0));
      it->second -= bc * qc;
      if (it->second.is_zero()) rem.erase(it);
    }
    quotient.emplace_back(qm, std::move(qc));
  }
  return SparsePoly::from_terms(std::move(quotient));
}

}  // namespace taut
