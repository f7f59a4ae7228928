#include "taut/covariant.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "taut/error.hpp"
#include "taut/theta.hpp"

namespace taut {

int pair_index(int j, int k) {
  if (j == k || j < 1 || k < 1 || j > 6 || k > 6) {
    throw Error(ErrorCode::InvalidArgument, "bad pair " + std::to_string(j) + "," + std::to_string(k));
  }
  if (j > k) std::swap(j, k);
  // rows of the strict upper triangle: (1,2..6), (2,3..6), ...
  int base = 0;
  for (int r = 1; r < j; ++r) base += 6 - r;
  return base + (k - j - 1);
}

std::pair<int, int> pair_of(int index) {
  for (int j = 1; j <= 5; ++j) {
    if (index < 6 - j) return {j, j + 1 + index};
    index -= 6 - j;
  }
  throw Error(ErrorCode::InvalidArgument, "pair index out of range");
}

int GenMonomial::order() const {
  int b = 0;
  for (auto a : l) b += a;
  return b;
}

int GenMonomial::form_degree(int i) const {
  int d = l[static_cast<std::size_t>(i - 1)];
  for (int j = 1; j <= 6; ++j) {
    if (j != i) d += p[static_cast<std::size_t>(pair_index(i, j))];
  }
  return d;
}

GenMonomial GenMonomial::operator*(const GenMonomial& o) const {
  GenMonomial r = *this;
  for (std::size_t i = 0; i < l.size(); ++i) r.l[i] = static_cast<std::uint8_t>(r.l[i] + o.l[i]);
  for (std::size_t i = 0; i < p.size(); ++i) r.p[i] = static_cast<std::uint8_t>(r.p[i] + o.p[i]);
  return r;
}

std::string GenMonomial::to_string() const {
  std::string s;
  auto factor = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  };
  for (int i = 0; i < 6; ++i) factor("l" + std::to_string(i + 1), l[static_cast<std::size_t>(i)]);
  for (int k = 0; k < 15; ++k) {
    auto [a, b] = pair_of(k);
    factor("p" + std::to_string(a) + std::to_string(b), p[static_cast<std::size_t>(k)]);
  }
  return s.empty() ? "1" : s;
}

GenExpr gen_normalize(GenExpr e) {
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  GenExpr out;
  for (auto& t : e) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!t.second.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

GenExpr gen_mul(const GenExpr& a, const GenExpr& b) {
  GenExpr out;
  out.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) out.emplace_back(ma * mb, ca * cb);
  }
  return gen_normalize(std::move(out));
}

GenExpr gen_add(const GenExpr& a, const GenExpr& b, const GaussRat& scale_b) {
  GenExpr out = a;
  for (const auto& [m, c] : b) out.emplace_back(m, c * scale_b);
  return gen_normalize(std::move(out));
}

namespace {
SparsePoly L(int i, int j) { return SparsePoly::variable(var::l(i, j)); }
SparsePoly lin_poly(int i) {
  return L(i, 1) * SparsePoly::variable(var::x1) + L(i, 2) * SparsePoly::variable(var::x2);
}
SparsePoly pluecker_poly(int i, int j) { return L(i, 1) * L(j, 2) - L(i, 2) * L(j, 1); }

std::mutex g_expand_mutex;
}  // namespace

SparsePoly gen_expand(const GenMonomial& m) {
  static std::map<GenMonomial, SparsePoly> cache;
  {
    std::lock_guard<std::mutex> lock(g_expand_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  SparsePoly r(1);
  for (int i = 1; i <= 6; ++i) {
    if (int e = m.l[static_cast<std::size_t>(i - 1)]; e > 0) r *= lin_poly(i).pow(static_cast<unsigned>(e));
  }
  for (int k = 0; k < 15; ++k) {
    if (int e = m.p[static_cast<std::size_t>(k)]; e > 0) {
      auto [a, b] = pair_of(k);
      r *= pluecker_poly(a, b).pow(static_cast<unsigned>(e));
    }
  }
  std::lock_guard<std::mutex> lock(g_expand_mutex);
  cache.emplace(m, r);
  return r;
}

SparsePoly gen_expand(const GenExpr& e) {
  SparsePoly r;
  for (const auto& [m, c] : e) r += gen_expand(m).scaled(c);
  return r;
}

int generic_degree(GenericForm f) {
  switch (f) {
    case GenericForm::F6: return 6;
    case GenericForm::F5: return 5;
    case GenericForm::L: return 1;
    default: return 2;
  }
}

int generic_first_var(GenericForm f) {
  switch (f) {
    case GenericForm::F6: return var::f6_first;
    case GenericForm::F5: return var::f5_first;
    case GenericForm::L: return var::lin_first;
    case GenericForm::Q1: return var::q1_first;
    case GenericForm::Q2: return var::q2_first;
    case GenericForm::Q3: return var::q3_first;
  }
  return -1;
}

std::string_view generic_name(GenericForm f) {
  static const std::array<std::string_view, kGenericForms> names = {"f6", "f5", "l", "q1", "q2", "q3"};
  return names[static_cast<std::size_t>(f)];
}

Grading Grading::operator+(const Grading& o) const {
  Grading g;
  for (std::size_t i = 0; i < forms.size(); ++i) g.forms[i] = forms[i] + o.forms[i];
  for (std::size_t i = 0; i < generic.size(); ++i) g.generic[i] = generic[i] + o.generic[i];
  g.order = order + o.order;
  return g;
}

std::string Grading::to_string() const {
  std::ostringstream os;
  os << "forms=(";
  for (std::size_t i = 0; i < forms.size(); ++i) os << (i ? "," : "") << forms[i];
  os << ")";
  for (std::size_t i = 0; i < generic.size(); ++i) {
    if (generic[i] != 0) os << " " << generic_name(static_cast<GenericForm>(i)) << "=" << generic[i];
  }
  os << " order=" << order;
  return os.str();
}

namespace {
Grading grading_of_monomial(const Monomial& m) {
  Grading g;
  for (int i = 1; i <= 6; ++i) g.forms[static_cast<std::size_t>(i - 1)] = m[var::l(i, 1)] + m[var::l(i, 2)];
  for (int f = 0; f < kGenericForms; ++f) {
    auto gf = static_cast<GenericForm>(f);
    int first = generic_first_var(gf);
    int s = 0;
    for (int k = 0; k <= generic_degree(gf); ++k) s += m[first + k];
    g.generic[static_cast<std::size_t>(f)] = s;
  }
  g.order = m[var::x1] + m[var::x2];
  return g;
}
}  // namespace

Grading grading_of(const SparsePoly& p) {
  if (p.is_zero()) return Grading{};
  Grading g = grading_of_monomial(p.terms().front().first);
  for (const auto& [m, c] : p.terms()) {
    if (m[var::t] != 0) throw Error(ErrorCode::Grading, "covariants may not contain t");
    if (!(grading_of_monomial(m) == g)) {
      throw Error(ErrorCode::Grading, "polynomial is not multi-homogeneous (" + g.to_string() + " vs " +
                                          grading_of_monomial(m).to_string() + ")");
    }
  }
  return g;
}

Covariant::Covariant(SparsePoly poly, std::optional<GenExpr> gen)
    : poly_(std::move(poly)), grading_(grading_of(poly_)), gen_(std::move(gen)) {}

Covariant::Covariant(SparsePoly poly, Grading grading, std::optional<GenExpr> gen)
    : poly_(std::move(poly)), grading_(grading), gen_(std::move(gen)) {
  if (!poly_.is_zero() && !(grading_of(poly_) == grading_)) {
    throw Error(ErrorCode::Grading, "declared grading does not match the polynomial");
  }
}

Covariant Covariant::from_gen(const GenExpr& gen) {
  GenExpr g = gen_normalize(gen);
  Grading grading;
  if (!g.empty()) {
    const auto& m = g.front().first;
    for (int i = 1; i <= 6; ++i) grading.forms[static_cast<std::size_t>(i - 1)] = m.form_degree(i);
    grading.order = m.order();
  }
  return Covariant(gen_expand(g), grading, g);
}

std::optional<int> Covariant::uniform_degree() const {
  for (int g : grading_.generic) {
    if (g != 0) return std::nullopt;
  }
  int d = grading_.forms[0];
  for (int f : grading_.forms) {
    if (f != d) return std::nullopt;
  }
  return d;
}

namespace {
Grading merged_grading(const Covariant& a, const Covariant& b) {
  if (a.is_zero()) return b.grading();
  if (b.is_zero()) return a.grading();
  if (!(a.grading() == b.grading())) {
    throw Error(ErrorCode::Grading, "cannot add " + a.grading().to_string() + " and " + b.grading().to_string());
  }
  return a.grading();
}
}  // namespace

Covariant& Covariant::operator+=(const Covariant& o) {
  Grading g = merged_grading(*this, o);
  std::optional<GenExpr> gen;
  if (gen_ && o.gen_) gen = gen_add(*gen_, *o.gen_);
  *this = Covariant(poly_ + o.poly_, g, std::move(gen));
  return *this;
}

Covariant& Covariant::operator-=(const Covariant& o) { return *this += -o; }

Covariant operator*(const Covariant& a, const Covariant& b) {
  std::optional<GenExpr> gen;
  if (a.gen_ && b.gen_) gen = gen_mul(*a.gen_, *b.gen_);
  return Covariant(a.poly_ * b.poly_, a.grading_ + b.grading_, std::move(gen));
}

Covariant Covariant::scaled(const GaussRat& c) const {
  std::optional<GenExpr> gen;
  if (gen_) {
    GenExpr g = *gen_;
    for (auto& t : g) t.second *= c;
    gen = gen_normalize(std::move(g));
  }
  return Covariant(poly_.scaled(c), grading_, std::move(gen));
}

Covariant Covariant::pow(unsigned e) const {
  Covariant r = constant_covariant(GaussRat(1));
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

Covariant constant_covariant(const GaussRat& c) {
  GenExpr g;
  if (!c.is_zero()) g.emplace_back(GenMonomial{}, c);
  return Covariant(SparsePoly(c), Grading{}, g);
}

Covariant linear_form(int i) {
  if (i < 1 || i > 6) throw Error(ErrorCode::InvalidArgument, "linear form index out of range");
  GenMonomial m;
  m.l[static_cast<std::size_t>(i - 1)] = 1;
  return Covariant::from_gen({{m, GaussRat(1)}});
}

Covariant pluecker(int i, int j) {
  if (i == j) throw Error(ErrorCode::IdenticalIndices, "p_ii is not defined");
  GenMonomial m;
  m.p[static_cast<std::size_t>(pair_index(i, j))] = 1;
  return Covariant::from_gen({{m, GaussRat(i < j ? 1 : -1)}});
}

Covariant universal_sextic() {
  GenMonomial m;
  m.l.fill(1);
  return Covariant::from_gen({{m, GaussRat(1)}});
}

Covariant generic_form(GenericForm f) {
  const int n = generic_degree(f);
  const int first = generic_first_var(f);
  SparsePoly p;
  for (int k = 0; k <= n; ++k) {
    p += SparsePoly::variable(first + k) * SparsePoly::variable(var::x1, n - k) * SparsePoly::variable(var::x2, k);
  }
  return Covariant(p);
}

Covariant discriminant_root() {
  GenMonomial m;
  m.p.fill(1);
  return Covariant::from_gen({{m, GaussRat(1)}});
}

Covariant six_p_monomial(const Partition6& pi) {
  GenMonomial m;
  for (const auto* t : {&pi.first, &pi.second}) {
    const auto& [a, b, c] = *t;
    m.p[static_cast<std::size_t>(pair_index(a, b))] += 1;
    m.p[static_cast<std::size_t>(pair_index(a, c))] += 1;
    m.p[static_cast<std::size_t>(pair_index(b, c))] += 1;
  }
  return Covariant::from_gen({{m, GaussRat(1)}});
}

Covariant transvectant(const Covariant& f, const Covariant& g, int r) {
  const int m = f.order();
  const int n = g.order();
  if (r < 0 || r > m || r > n) {
    throw Error(ErrorCode::OrderTooSmall, "transvectant index " + std::to_string(r) + " exceeds orders " +
                                              std::to_string(m) + ", " + std::to_string(n));
  }
  // d[a] = d^r / dx1^{r-a} dx2^a
  auto partials = [r](const SparsePoly& p) {
    std::vector<SparsePoly> out;
    for (int a = 0; a <= r; ++a) {
      SparsePoly q = p;
      for (int k = 0; k < r - a; ++k) q = q.derivative(var::x1);
      for (int k = 0; k < a; ++k) q = q.derivative(var::x2);
      out.push_back(std::move(q));
    }
    return out;
  };
  auto df = partials(f.poly());
  auto dg = partials(g.poly());
  SparsePoly sum;
  mpz_class binom = 1;
  for (int k = 0; k <= r; ++k) {
    GaussRat c = GaussRat(mpq_class(k % 2 == 0 ? binom : mpz_class(-binom)));
    sum += (df[static_cast<std::size_t>(k)] * dg[static_cast<std::size_t>(r - k)]).scaled(c);
    binom = binom * (r - k) / (k + 1);
  }
  auto fact = [](int x) {
    mpz_class v = 1;
    for (int i = 2; i <= x; ++i) v *= i;
    return v;
  };
  mpq_class pref(fact(m - r) * fact(n - r), fact(m) * fact(n));
  pref.canonicalize();
  Grading gr = f.grading() + g.grading();
  gr.order = m + n - 2 * r;
  return Covariant(sum.scaled(GaussRat(pref)), gr);
}

Covariant specialize_form(const Covariant& c, std::span<const FormAssignment> assignment) {
  std::vector<std::pair<int, SparsePoly>> images;
  for (const auto& a : assignment) {
    const int n = generic_degree(a.form);
    if (static_cast<int>(a.linear_forms.size()) != n) {
      throw Error(ErrorCode::DegreeMismatch, std::string(generic_name(a.form)) + " has degree " +
                                                 std::to_string(n) + " but is assigned " +
                                                 std::to_string(a.linear_forms.size()) + " linear forms");
    }
    SparsePoly prod(1);
    for (int i : a.linear_forms) prod *= linear_form(i).poly();
    auto coeffs = prod.x_coefficients(n);
    for (int k = 0; k <= n; ++k) {
      images.emplace_back(generic_first_var(a.form) + k, coeffs[static_cast<std::size_t>(k)]);
    }
  }
  return Covariant(c.poly().substitute(images));
}

Perm6 perm_compose(const Perm6& s, const Perm6& t) {
  Perm6 r{};
  for (std::size_t i = 0; i < 6; ++i) r[i] = s[static_cast<std::size_t>(t[i] - 1)];
  return r;
}

Perm6 perm_inverse(const Perm6& s) {
  Perm6 r{};
  for (std::size_t i = 0; i < 6; ++i) r[static_cast<std::size_t>(s[i] - 1)] = static_cast<int>(i) + 1;
  return r;
}

Perm6 perm_identity() { return {1, 2, 3, 4, 5, 6}; }

SparsePoly s6_act(const Perm6& sigma, const SparsePoly& p) {
  std::array<int, var::kCount> rn{};
  for (int v = 0; v < var::kCount; ++v) rn[static_cast<std::size_t>(v)] = v;
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 2; ++j) rn[static_cast<std::size_t>(var::l(i, j))] = var::l(sigma[static_cast<std::size_t>(i - 1)], j);
  }
  return p.rename(rn);
}

GenExpr s6_act(const Perm6& sigma, const GenExpr& e) {
  GenExpr out;
  out.reserve(e.size());
  for (const auto& [m, c] : e) {
    GenMonomial r;
    bool negate = false;
    for (int i = 1; i <= 6; ++i) {
      r.l[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)] = m.l[static_cast<std::size_t>(i - 1)];
    }
    for (int k = 0; k < 15; ++k) {
      int ex = m.p[static_cast<std::size_t>(k)];
      if (ex == 0) continue;
      auto [a, b] = pair_of(k);
      int sa = sigma[static_cast<std::size_t>(a - 1)];
      int sb = sigma[static_cast<std::size_t>(b - 1)];
      r.p[static_cast<std::size_t>(pair_index(sa, sb))] = static_cast<std::uint8_t>(ex);
      if (sa > sb && ex % 2 == 1) negate = !negate;
    }
    out.emplace_back(r, negate ? -c : c);
  }
  return gen_normalize(std::move(out));
}

Covariant s6_act(const Perm6& sigma, const Covariant& c) {
  Grading g = c.grading();
  for (int i = 1; i <= 6; ++i) {
    g.forms[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i - 1)] - 1)] = c.grading().forms[static_cast<std::size_t>(i - 1)];
  }
  std::optional<GenExpr> gen;
  if (c.gen()) gen = s6_act(sigma, *c.gen());
  return Covariant(s6_act(sigma, c.poly()), g, std::move(gen));
}

long dim_graded(int d, int b) {
  if (d < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (b % 2 == 1) return 0;
  const int target = 3 * d + b / 2;
  std::vector<mpz_class> poly(static_cast<std::size_t>(target + 1), 0);
  poly[0] = 1;
  for (int f = 0; f < 6; ++f) {
    std::vector<mpz_class> next(poly.size(), 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (int k = 0; k <= d && i + static_cast<std::size_t>(k) < poly.size(); ++k) next[i + static_cast<std::size_t>(k)] += poly[i];
    }
    poly = std::move(next);
  }
  mpz_class v = poly[static_cast<std::size_t>(target)];
  if (target - (b + 1) >= 0) v -= poly[static_cast<std::size_t>(target - b - 1)];
  return v.get_si();
}

}  // namespace taut
