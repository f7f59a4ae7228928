#include "taut/verify.hpp"

#include <sstream>

#include "taut/covariant_space.hpp"
#include "taut/divisor.hpp"
#include "taut/error.hpp"
#include "taut/expr.hpp"
#include "taut/symmetry.hpp"
#include "taut/theta.hpp"
#include "taut/valuation.hpp"

namespace taut {

namespace {

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) os << ",";
    if constexpr (std::is_same_v<T, int>) {
      if (v[k] == kValuationInfinity) {
        os << "inf";
        continue;
      }
    }
    os << v[k];
  }
  return os.str() + "]";
}

std::vector<CheckResult> identities(int box) {
  std::vector<CheckResult> out;
  FourierSeries p[7][7];
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) p[a][b] = pluecker_tilde(a, b, box);
  }
  int bad = 0;
  std::string which;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      const auto q = pluecker_quadruple(a, b);
      FourierSeries prod = even_theta(q[0], box);
      for (int k = 1; k < 4; ++k) prod = series_mul(prod, even_theta(q[static_cast<std::size_t>(k)], box));
      if (!(p[a][b] == prod.scaled(GaussRat(pluecker_sign(a, b))))) {
        ++bad;
        which += " " + std::to_string(10 * a + b);
      }
    }
  }
  out.push_back({"ptilde equals signed theta quadruple (15 pairs)", bad == 0, bad == 0 ? "" : "fails for" + which});

  const bool anti = pluecker_tilde(2, 1, box) == -p[1][2] && pluecker_tilde(6, 3, box) == -p[3][6];
  out.push_back({"antisymmetry", anti, ""});

  const FourierSeries rel = series_mul(p[1][3], p[2][4]) - series_mul(p[1][4], p[2][3]) - series_mul(p[1][2], p[3][4]);
  out.push_back({"Pluecker relation p13 p24 - p14 p23 = p12 p34", rel.is_zero(), ""});

  FourierSeries all = FourierSeries::constant(box, GaussRat(1));
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) all = series_mul(all, p[a][b]);
  }
  const FourierSeries c5 = chi5(box);
  const FourierSeries rhs = series_pow(c5, 6).scaled(GaussRat(mpq_class(-(mpz_class(1) << 36))));
  out.push_back({"prod ptilde = -2^36 chi5^6", all == rhs,
                 all.is_zero() ? "both sides vanish in this box" : std::to_string(all.size()) + " terms"});

  bool lead = true;
  if (box >= 4) {
    const auto s = c5.slice(4, 4);
    lead = s.size() == 2 && s[0] == std::pair{-2, GaussRat(-1)} && s[1] == std::pair{2, GaussRat(1)};
    for (const auto& [e, c] : c5.terms()) lead = lead && e.e1 + e.e2 >= 8;
  }
  out.push_back({"chi5 lowest slice Q1^4 Q2^4 (Q12^2 - Q12^-2)", lead, ""});

  bool semi = c5.is_semipositive();
  for (int i = 1; i <= 10; ++i) semi = semi && even_theta(i, box).is_semipositive();
  for (int i = 1; i <= 6; ++i) {
    auto g = gradient(i, box);
    semi = semi && g.first.is_semipositive() && g.second.is_semipositive();
  }
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) semi = semi && p[a][b].is_semipositive();
  }
  out.push_back({"semipositivity e12^2 <= e1 e2", semi, ""});
  return out;
}

std::vector<CheckResult> valuations() {
  std::vector<CheckResult> out;
  const auto& table = char_partition_table();

  bool ok = true;
  for (const auto& r : v_pi_all(universal_sextic())) ok = ok && r.values == std::vector<int>{2, 1, 0, -1, 0, 1, 2};
  out.push_back({"v(C16) = [2,1,0,-1,0,1,2] for all pi", ok, show(v_pi(universal_sextic(), table[0]).values)});

  ok = true;
  for (const auto& r : v_pi_all(discriminant_root())) ok = ok && r.values == std::vector<int>{1};
  out.push_back({"v(I5) = 1 for all pi", ok, ""});

  ok = true;
  for (const auto& a : table) {
    const Covariant m = six_p_monomial(a);
    for (const auto& b : table) ok = ok && v_pi(m, b).aggregate == (a == b ? 4 : 0);
  }
  out.push_back({"v_pi(six-p monomial of pi') = 4 delta", ok, ""});

  const Covariant c22 = evaluate(parse("50*T(T(f5, f5, 4), l^2, 1) with f5=l1*l2*l3*l4*l5, l=l6"));
  ok = true;
  for (const auto& r : v_pi_all(c22)) ok = ok && r.values == std::vector<int>{-1, -2, -1};
  out.push_back({"v(specialized C22) = [-1,-2,-1]", ok, show(v_pi(c22, table[0]).values)});
  return out;
}

std::vector<CheckResult> dimensions() {
  std::vector<CheckResult> out;
  const int pins[][3] = {{1, 0, 5}, {2, 0, 15}, {3, 0, 34}, {1, 2, 9}, {1, 4, 5},
                         {1, 6, 1}, {2, 4, 40}, {2, 6, 29}, {2, 8, 15}};
  for (const auto& [d, b, want] : pins) {
    const long got = static_cast<long>(space_basis(d, b).dim());
    const long gen = dim_graded(d, b);
    out.push_back({"dim C'_{" + std::to_string(d) + "," + std::to_string(b) + "} = " + std::to_string(want),
                   got == want && gen == want, "basis " + std::to_string(got) + ", series " + std::to_string(gen)});
  }
  return out;
}

std::string show(const std::vector<IsotypicPart>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += " + ";
    if (p.multiplicity > 1) s += std::to_string(p.multiplicity);
    s += "s" + p.lambda.to_string();
  }
  return s;
}

std::vector<CheckResult> decompositions() {
  std::vector<CheckResult> out;
  const struct {
    int d, b;
    const char* want;
  } pins[] = {{1, 2, "s[4,2]"}, {2, 4, "s[6] + s[5,1] + 2s[4,2] + s[3,2,1]"}, {2, 6, "s[5,1] + s[4,2] + s[4,1^2] + s[3^2]"}};
  for (const auto& pin : pins) {
    const std::string got = show(decompose(space_basis(pin.d, pin.b)));
    out.push_back({"C'_{" + std::to_string(pin.d) + "," + std::to_string(pin.b) + "} = " + pin.want, got == pin.want, got});
  }
  return out;
}

std::vector<CheckResult> divisor() {
  std::vector<CheckResult> out;
  std::array<int, 10> c{};
  for (auto t : {std::array{1, 4, 6}, {1, 3, 6}, {1, 3, 5}, {1, 4, 5}, {1, 3, 4}, {1, 5, 6}}) {
    c[static_cast<std::size_t>(partition_index(Partition6::from_triple(t)) - 1)] = 1;
  }
  FormData f = divisor_to_form(c, {1, 1, 0, 0, 0, 0});
  bool ok = f.j == 2 && f.k == 4 && f.admissible;
  for (int k = 0; k < 15; ++k) ok = ok && f.r[static_cast<std::size_t>(k)] == (k == pair_index(1, 2) ? 0 : 1);
  out.push_back({"six H's + W1 + W2 gives weight (2,4)", ok, "(" + f.j.get_str() + "," + f.k.get_str() + ")"});

  c = {};
  c[static_cast<std::size_t>(partition_index(Partition6::from_triple({1, 2, 3})) - 1)] = 2;
  f = divisor_to_form(c, {2, 2, 2, 0, 0, 0});
  ok = f.j == 6 && f.k == 4 && f.admissible;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) ok = ok && f.r[static_cast<std::size_t>(pair_index(a, b))] == (a >= 4 ? 2 : 1);
  }
  out.push_back({"2 H_(123)(456) + 2(W1+W2+W3) gives weight (6,4)", ok, "(" + f.j.get_str() + "," + f.k.get_str() + ")"});
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"identities", "valuations", "dimensions", "decompositions", "divisor"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int box) {
  if (suite == "identities") return identities(box);
  if (suite == "valuations") return valuations();
  if (suite == "dimensions") return dimensions();
  if (suite == "decompositions") return decompositions();
  if (suite == "divisor") return divisor();
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
}

}  // namespace taut
