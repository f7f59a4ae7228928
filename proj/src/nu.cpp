#include "taut/nu.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "taut/covariant_space.hpp"
#include "taut/error.hpp"
#include "taut/theta.hpp"

namespace taut {

namespace {

mpq_class ratio(long a, long b) {
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

using Components = std::vector<FourierSeries>;

Components zero_components(std::size_t count, int box) { return Components(count, FourierSeries(box)); }

// f * (g1 x1 + g2 x2) for a binary form f given by its coefficients.
Components mul_linear(const Components& f, const FourierSeries& g1, const FourierSeries& g2) {
  const int box = f.empty() ? g1.box() : f[0].box();
  Components r = zero_components(f.size() + 1, box);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (f[j].is_zero()) continue;
    r[j] = r[j] + series_mul(f[j], g1);
    r[j + 1] = r[j + 1] + series_mul(f[j], g2);
  }
  return r;
}

class ThetaProducts {
 public:
  explicit ThetaProducts(int box) : box_(box) {}

  const FourierSeries& get(const std::array<int, 10>& n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    FourierSeries p = FourierSeries::constant(box_, GaussRat(1));
    for (int k = 0; k < 10; ++k) {
      if (n[static_cast<std::size_t>(k)] > 0) p = series_mul(p, power(k + 1, n[static_cast<std::size_t>(k)]));
    }
    return cache_.emplace(n, std::move(p)).first->second;
  }

 private:
  const FourierSeries& power(int k, int e) {
    auto key = std::make_pair(k, e);
    auto it = powers_.find(key);
    if (it != powers_.end()) return it->second;
    return powers_.emplace(key, series_pow(even_theta(k, box_), static_cast<unsigned>(e))).first->second;
  }

  int box_;
  std::map<std::array<int, 10>, FourierSeries> cache_;
  std::map<std::pair<int, int>, FourierSeries> powers_;
};

struct ThetaForm {
  std::array<int, 10> exps{};
  int sign = 1;
};

ThetaForm theta_form(const GenMonomial& m) {
  ThetaForm t;
  for (int k = 0; k < 15; ++k) {
    const int e = m.p[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    auto [a, b] = pair_of(k);
    for (int idx : pluecker_quadruple(a, b)) t.exps[static_cast<std::size_t>(idx - 1)] += e;
    if (pluecker_sign(a, b) < 0 && e % 2 == 1) t.sign = -t.sign;
  }
  return t;
}

// Structured evaluation: every p~ is a signed product of four theta constants,
// so a common power of prod(theta) = -64 chi5 can be split off symbolically.
MeroForm eval_structured(const GenExpr& gen, int order, int box) {
  std::vector<ThetaForm> forms;
  int content = std::numeric_limits<int>::max();
  for (const auto& [m, c] : gen) {
    forms.push_back(theta_form(m));
    content = std::min(content, *std::min_element(forms.back().exps.begin(), forms.back().exps.end()));
  }
  if (gen.empty()) content = 0;

  std::array<std::pair<FourierSeries, FourierSeries>, 6> g;
  for (int i = 1; i <= 6; ++i) g[static_cast<std::size_t>(i - 1)] = gradient(i, box);
  ThetaProducts thetas(box);
  std::map<std::array<std::uint8_t, 6>, Components> lparts;
  auto lpart = [&](const std::array<std::uint8_t, 6>& a) -> const Components& {
    auto it = lparts.find(a);
    if (it != lparts.end()) return it->second;
    Components f{FourierSeries::constant(box, GaussRat(1))};
    for (std::size_t i = 0; i < 6; ++i) {
      for (int e = 0; e < a[i]; ++e) f = mul_linear(f, g[i].first, g[i].second);
    }
    return lparts.emplace(a, std::move(f)).first->second;
  };

  // (-64)^content from prod(theta)^content = (-64 chi5)^content.
  GaussRat unit(1);
  for (int s = 0; s < content; ++s) unit *= GaussRat(-64);

  Components total = zero_components(static_cast<std::size_t>(order) + 1, box);
  for (std::size_t t = 0; t < gen.size(); ++t) {
    const auto& [m, c] = gen[t];
    std::array<int, 10> rest = forms[t].exps;
    for (int& x : rest) x -= content;
    const FourierSeries& th = thetas.get(rest);
    const GaussRat scale = c * unit * GaussRat(forms[t].sign);
    const Components& lp = lpart(m.l);
    for (std::size_t j = 0; j < lp.size(); ++j) {
      if (lp[j].is_zero()) continue;
      total[j] = total[j] + series_mul(th, lp[j]).scaled(scale);
    }
  }
  MeroForm f;
  f.components = std::move(total);
  f.chi5_content = content;
  return f;
}

// Plain substitution v -> series[v] monomial by monomial.
Components eval_polynomial(const std::vector<SparsePoly>& coeffs,
                           const std::map<int, FourierSeries>& images, int box) {
  std::map<std::pair<int, int>, FourierSeries> powers;
  auto power = [&](int v, int e) -> const FourierSeries& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto img = images.find(v);
    if (img == images.end()) {
      throw Error(ErrorCode::InvalidArgument, "no series for variable " + std::string(var::name(v)));
    }
    return powers.emplace(key, series_pow(img->second, static_cast<unsigned>(e))).first->second;
  };
  Components out;
  for (const auto& p : coeffs) {
    FourierSeries acc(box);
    for (const auto& [m, c] : p.terms()) {
      FourierSeries term = FourierSeries::constant(box, c);
      for (int v = 0; v < var::kCount; ++v) {
        if (m[v] > 0) term = series_mul(term, power(v, m[v]));
      }
      acc = acc + term;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

bool has_generic_symbols(const Grading& g) {
  return std::any_of(g.generic.begin(), g.generic.end(), [](int x) { return x != 0; });
}

std::map<std::pair<int, int>, CovariantSpace>& space_cache() {
  static std::map<std::pair<int, int>, CovariantSpace> c;
  return c;
}

std::optional<GenExpr> structure_of(const Covariant& c, int d) {
  if (c.gen()) return c.gen();
  const int b = c.order();
  if (!((d <= 3 && b <= 10) || (d == 4 && b == 0))) return std::nullopt;
  auto key = std::make_pair(d, b);
  auto it = space_cache().find(key);
  if (it == space_cache().end()) it = space_cache().emplace(key, space_basis(d, b)).first;
  return it->second.with_structure(c).gen();
}

}  // namespace

int MeroForm::box() const {
  int b = std::numeric_limits<int>::max();
  for (const auto& c : components) b = std::min(b, c.box());
  return components.empty() ? 0 : b;
}

std::vector<FourierSeries> MeroForm::numerator() const {
  if (chi5_content == 0) return components;
  std::vector<FourierSeries> out;
  for (const auto& c : components) {
    out.push_back(series_mul(c, series_pow(chi5(c.box()), static_cast<unsigned>(chi5_content))));
  }
  return out;
}

MeroForm nu_eval(const Covariant& c, int box) {
  if (has_generic_symbols(c.grading())) {
    throw Error(ErrorCode::InvalidArgument, "generic forms must be specialized before applying nu");
  }
  auto d = c.uniform_degree();
  if (!d) throw Error(ErrorCode::NonUniformDegree, "nu needs equal degree in all six forms");
  const int b = c.order();
  MeroForm f;
  if (auto gen = structure_of(c, *d)) {
    f = eval_structured(*gen, b, box);
  } else {
    std::map<int, FourierSeries> images;
    for (int i = 1; i <= 6; ++i) {
      auto g = gradient(i, box);
      images.emplace(var::l(i, 1), g.first);
      images.emplace(var::l(i, 2), g.second);
    }
    f.components = eval_polynomial(c.x_coefficients(), images, box);
  }
  f.chi5_exponent = *d;
  f.weight_j = b;
  f.weight_k = ratio(2 * *d - b, 2);
  return f;
}

MeroForm reduce(const MeroForm& f, int steps) {
  if (f.chi5_exponent.get_den() != 1) {
    throw Error(ErrorCode::FractionalResidue, "pole order " + f.chi5_exponent.get_str() + " is not an integer");
  }
  if (steps < 0 || steps > f.chi5_exponent) {
    throw Error(ErrorCode::InvalidArgument, "cannot remove " + std::to_string(steps) + " powers of chi5 from a pole of order " +
                                                f.chi5_exponent.get_str());
  }
  MeroForm r = f;
  const int symbolic = std::min(steps, f.chi5_content);
  r.chi5_content -= symbolic;
  r.chi5_exponent -= steps;
  const int rest = steps - symbolic;
  if (rest > 0) {
    for (auto& c : r.components) {
      FourierSeries divisor = series_pow(chi5(c.box()), static_cast<unsigned>(rest));
      c = series_div(c, divisor);
    }
    const int box = r.box();
    if (box < 0) {
      throw Error(ErrorCode::OutOfBox, "box " + std::to_string(f.box()) + " is too small to divide by chi5^" +
                                           std::to_string(rest));
    }
    for (auto& c : r.components) c = c.restricted(box);
  }
  return r;
}

MeroForm reduce_fully(const MeroForm& f) {
  if (f.chi5_exponent.get_den() != 1) {
    throw Error(ErrorCode::FractionalResidue, "pole order " + f.chi5_exponent.get_str() + " is not an integer");
  }
  return reduce(f, static_cast<int>(f.chi5_exponent.get_num().get_si()));
}

MeroForm times_chi5_power(const MeroForm& f, int p) {
  MeroForm r = f;
  r.weight_k += 5 * p;
  r.chi5_exponent -= p;
  if (r.chi5_exponent < 0 && r.chi5_exponent.get_den() == 1) {
    r.chi5_content += static_cast<int>(-r.chi5_exponent.get_num().get_si());
    r.chi5_exponent = 0;
  }
  return r;
}

std::vector<GaussRat> fourier_coefficient(const MeroForm& f, const FourierIndex& idx) {
  if (f.chi5_exponent != 0) {
    throw Error(ErrorCode::InvalidArgument, "reduce the form to pole order 0 before reading coefficients");
  }
  const FourierExp e = idx.exponent();
  if (e.e1 < 0 || e.e2 < 0 || e.e1 > f.box() || e.e2 > f.box()) {
    throw Error(ErrorCode::OutOfBox, "index (" + std::to_string(idx.n) + "," + std::to_string(idx.r) + "," +
                                         std::to_string(idx.m) + ") lies outside box " + std::to_string(f.box()));
  }
  std::vector<GaussRat> out;
  for (const auto& c : f.numerator()) out.push_back(c.coefficient(e));
  return out;
}

std::optional<Profile> profile_from_name(std::string_view name) {
  if (name == "gamma0_2") return Profile::Gamma0_2;
  if (name == "gamma2_w") return Profile::Gamma2_w;
  return std::nullopt;
}

std::vector<FourierSeries> sym_gradients(std::span<const int> forms, int box) {
  Components f{FourierSeries::constant(box, GaussRat(1))};
  for (int i : forms) {
    auto g = gradient(i, box);
    f = mul_linear(f, g.first, g.second);
  }
  return f;
}

MeroForm profile_eval(Profile profile, const Covariant& c, int box) {
  const Grading& g = c.grading();
  if (std::any_of(g.forms.begin(), g.forms.end(), [](int x) { return x != 0; })) {
    throw Error(ErrorCode::InvalidArgument, "profile evaluation takes a covariant in generic forms only");
  }
  auto deg = [&](GenericForm f) { return g.generic[static_cast<std::size_t>(f)]; };
  std::map<int, FourierSeries> images;
  MeroForm out;
  out.weight_j = g.order;
  auto bind = [&](GenericForm f, const Components& comps) {
    for (std::size_t k = 0; k < comps.size(); ++k) images.emplace(generic_first_var(f) + static_cast<int>(k), comps[k]);
  };
  int contractions = -g.order;
  for (int f = 0; f < kGenericForms; ++f) contractions += g.generic[static_cast<std::size_t>(f)] * generic_degree(GenericForm(f));
  out.weight_k = ratio(contractions, 2);

  if (profile == Profile::Gamma0_2) {
    for (auto f : {GenericForm::F6, GenericForm::F5, GenericForm::L}) {
      if (deg(f) != 0) throw Error(ErrorCode::InvalidArgument, "the Gamma0[2] profile only binds q1, q2, q3");
    }
    const int pairs[3][2] = {{1, 2}, {3, 4}, {5, 6}};
    const GenericForm qs[3] = {GenericForm::Q1, GenericForm::Q2, GenericForm::Q3};
    for (int k = 0; k < 3; ++k) bind(qs[k], sym_gradients(pairs[k], box));
    // Denominators theta_1..6, theta_7 theta_8, theta_9 theta_10, raised to the
    // per-quadric degrees and completed to a common power of prod(theta).
    const std::vector<int> dens[3] = {{1, 2, 3, 4, 5, 6}, {7, 8}, {9, 10}};
    const int K = std::max({deg(qs[0]), deg(qs[1]), deg(qs[2])});
    std::array<int, 10> extra{};
    for (int k = 0; k < 3; ++k) {
      for (int other = 0; other < 3; ++other) {
        if (other == k) continue;
        for (int t : dens[other]) extra[static_cast<std::size_t>(t - 1)] += K - deg(qs[k]);
      }
    }
    out.components = eval_polynomial(c.x_coefficients(), images, box);
    ThetaProducts thetas(box);
    const FourierSeries& mult = thetas.get(extra);
    GaussRat scale(1);
    for (int s = 0; s < K; ++s) scale *= GaussRat::rational(-1, 64);
    for (auto& comp : out.components) comp = series_mul(comp, mult).scaled(scale);
    out.chi5_exponent = K;
    out.weight_k += -2 * deg(qs[0]);
  } else {
    for (auto f : {GenericForm::F6, GenericForm::Q1, GenericForm::Q2, GenericForm::Q3}) {
      if (deg(f) != 0) throw Error(ErrorCode::InvalidArgument, "the Gamma2[w] profile only binds f5 and l");
    }
    const int five[] = {1, 2, 3, 4, 5};
    const int six[] = {6};
    bind(GenericForm::F5, sym_gradients(five, box));
    bind(GenericForm::L, sym_gradients(six, box));
    const mpq_class e = ratio(5 * deg(GenericForm::F5) + deg(GenericForm::L), 6);
    if (e.get_den() != 1) {
      throw Error(ErrorCode::FractionalResidue, "chi5 exponent " + e.get_str() + " is not an integer");
    }
    out.components = eval_polynomial(c.x_coefficients(), images, box);
    out.chi5_exponent = e;
    out.weight_k += ratio(-5 * deg(GenericForm::F5) - deg(GenericForm::L), 3);
  }
  return out;
}

std::optional<GaussRat> proportionality(std::span<const FourierSeries> a, std::span<const FourierSeries> b) {
  if (a.size() != b.size()) return std::nullopt;
  int box = std::numeric_limits<int>::max();
  for (const auto& s : a) box = std::min(box, s.box());
  for (const auto& s : b) box = std::min(box, s.box());
  std::optional<GaussRat> lambda;
  bool a_zero = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    FourierSeries x = a[k].restricted(box);
    FourierSeries y = b[k].restricted(box);
    if (!x.is_zero()) a_zero = false;
    if (!lambda && !y.is_zero()) {
      const auto& [e, c] = y.terms().front();
      lambda = x.coefficient(e) / c;
    }
  }
  if (!lambda) return a_zero ? std::optional<GaussRat>(GaussRat(0)) : std::nullopt;
  for (std::size_t k = 0; k < a.size(); ++k) {
    FourierSeries x = a[k].restricted(box);
    FourierSeries y = b[k].restricted(box).scaled(*lambda);
    if (!(x - y).is_zero()) return std::nullopt;
  }
  return lambda;
}

}  // namespace taut
