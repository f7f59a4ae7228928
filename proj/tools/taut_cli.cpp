// taut: command-line front end to the library.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "taut/covariant_space.hpp"
#include "taut/divisor.hpp"
#include "taut/error.hpp"
#include "taut/expr.hpp"
#include "taut/nu.hpp"
#include "taut/series_io.hpp"
#include "taut/symmetry.hpp"
#include "taut/theta.hpp"
#include "taut/valuation.hpp"
#include "taut/verify.hpp"

using namespace taut;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  int box = 12;
  std::string expr;
  std::string expr_file;
  std::string out_dir;
};

std::string read_expression(const Options& o) {
  if (!o.expr.empty() && !o.expr_file.empty()) throw Usage("give either --expr or --expr-file");
  if (!o.expr.empty()) return o.expr;
  if (o.expr_file.empty()) throw Usage("an expression is required (--expr or --expr-file)");
  std::ifstream in(o.expr_file);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + o.expr_file);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  // Allow '#' comments and several lines.
  std::string joined;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    joined += line + " ";
  }
  return joined;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Usage("'" + s + "' is not a comma-separated list of integers");
    }
  }
  return out;
}

json grading_json(const Grading& g) {
  json j;
  j["forms"] = g.forms;
  json gen = json::object();
  for (int f = 0; f < kGenericForms; ++f) {
    if (g.generic[static_cast<std::size_t>(f)] != 0) gen[std::string(generic_name(GenericForm(f)))] = g.generic[static_cast<std::size_t>(f)];
  }
  j["generic"] = gen;
  j["order"] = g.order;
  return j;
}

FourierSeries theta_object(const std::string& kind, const std::string& index, int component, int box, std::string& name) {
  auto one = [&](int lo, int hi) {
    std::vector<int> v = int_list(index);
    if (v.size() != 1 || v[0] < lo || v[0] > hi) throw Usage("--index must be in " + std::to_string(lo) + ".." + std::to_string(hi));
    return v[0];
  };
  if (kind == "even") {
    const int i = one(1, 10);
    name = "theta_even_" + std::to_string(i);
    return even_theta(i, box);
  }
  if (kind == "grad") {
    const int i = one(1, 6);
    if (component != 1 && component != 2) throw Usage("--component must be 1 or 2 for gradients");
    name = "grad_" + std::to_string(i) + "_" + std::to_string(component);
    auto g = gradient(i, box);
    return component == 1 ? g.first : g.second;
  }
  if (kind == "chi5") {
    name = "chi5";
    return chi5(box);
  }
  if (kind == "ptilde") {
    if (index.size() != 2) throw Usage("--index for ptilde is two digits, e.g. 12");
    const int a = index[0] - '0', b = index[1] - '0';
    if (a < 1 || a > 6 || b < 1 || b > 6) throw Usage("ptilde indices lie in 1..6");
    name = "ptilde_" + index;
    return pluecker_tilde(a, b, box);
  }
  throw Usage("--kind must be even, grad, chi5 or ptilde");
}

int cmd_theta(const Options& o, const std::string& kind, const std::string& index, int component) {
  std::string name;
  std::function<FourierSeries(int)> compute = [&](int n) { return theta_object(kind, index, component, n, name); };
  theta_object(kind, index, component, 0, name);  // validates arguments and fixes the name
  const auto cache = SeriesCache::from_environment();
  FourierSeries s = cache ? cache->get(name, o.box, compute) : compute(o.box);
  if (o.out_dir.empty()) {
    write_series(std::cout, name, s);
  } else {
    SeriesCache out(o.out_dir);
    out.store(name, s);
    std::cerr << out.path_for(name, s.box()).string() << "\n";
  }
  return 0;
}

int cmd_eval(const Options& o) {
  const Program p = parse(read_expression(o));
  const Covariant c = evaluate(p);
  if (o.format == "csv") {
    std::cout << "x_power,polynomial\n";
    const auto coeffs = c.x_coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) std::cout << j << ",\"" << coeffs[j].to_string() << "\"\n";
    return 0;
  }
  json j;
  j["expression"] = print(p);
  j["grading"] = grading_json(c.grading());
  if (auto d = c.uniform_degree()) j["degree"] = *d;
  j["terms"] = c.poly().terms().size();
  j["polynomial"] = c.poly().to_string();
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_valuate(const Options& o) {
  const Program p = parse(read_expression(o));
  const Covariant c = evaluate(p);
  const auto reports = v_pi_all(c);
  auto value = [](int v) { return v == kValuationInfinity ? json("inf") : json(v); };
  if (o.format == "csv") {
    std::cout << "partition,x_power,valuation\n";
    for (const auto& r : reports) {
      for (std::size_t j = 0; j < r.values.size(); ++j) {
        std::cout << r.partition.to_string() << "," << j << "," << value(r.values[j]).dump() << "\n";
      }
    }
    return 0;
  }
  json j;
  j["expression"] = print(p);
  j["partitions"] = json::array();
  for (const auto& r : reports) {
    json vals = json::array();
    for (int v : r.values) vals.push_back(value(v));
    j["partitions"].push_back({{"partition", r.partition.to_string()}, {"values", vals}, {"aggregate", value(r.aggregate)}});
  }
  j["needed_chi5_power"] = needed_chi5_power(c);
  j["holomorphic"] = is_holomorphic(c);
  std::cout << j.dump(2) << "\n";
  return 0;
}

std::vector<std::pair<int, int>> requested_pieces(int d, int b) {
  if (d >= 0 && b >= 0) return {{d, b}};
  if (d >= 0 || b >= 0) throw Usage("give both -d and -b, or neither");
  return {{1, 0}, {2, 0}, {3, 0}, {1, 2}, {1, 4}, {1, 6}, {2, 4}, {2, 6}, {2, 8}};
}

int cmd_dims(const Options& o, int d, int b) {
  json rows = json::array();
  if (o.format == "csv") std::cout << "d,b,dim_graded,basis\n";
  for (auto [dd, bb] : requested_pieces(d, b)) {
    const long gen = dim_graded(dd, bb);
    const long basis = static_cast<long>(space_basis(dd, bb).dim());
    if (o.format == "csv") {
      std::cout << dd << "," << bb << "," << gen << "," << basis << "\n";
    } else {
      rows.push_back({{"d", dd}, {"b", bb}, {"dim_graded", gen}, {"basis", basis}});
    }
  }
  if (o.format != "csv") std::cout << rows.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const Options& o, int d, int b) {
  if (d < 0 || b < 0) throw Usage("decompose needs -d and -b");
  const auto parts = decompose(space_basis(d, b));
  if (o.format == "csv") {
    std::cout << "lambda,multiplicity,dimension\n";
    for (const auto& p : parts) std::cout << "\"" << p.lambda.to_string() << "\"," << p.multiplicity << "," << p.dimension << "\n";
    return 0;
  }
  json rows = json::array();
  for (const auto& p : parts) {
    rows.push_back({{"lambda", p.lambda.to_string()}, {"multiplicity", p.multiplicity}, {"dimension", p.dimension}});
  }
  std::cout << json{{"d", d}, {"b", b}, {"parts", rows}}.dump(2) << "\n";
  return 0;
}

int cmd_divisor(const Options& o, const std::string& cs, const std::string& ds) {
  const auto c = int_list(cs), d = int_list(ds);
  if (c.size() != 10 || d.size() != 6) throw Usage("--c takes 10 integers and --d takes 6");
  std::array<int, 10> ca{};
  std::array<int, 6> da{};
  std::copy(c.begin(), c.end(), ca.begin());
  std::copy(d.begin(), d.end(), da.begin());
  const FormData f = divisor_to_form(ca, da);
  if (o.format == "csv") {
    std::cout << "pair,r\n";
    for (int k = 0; k < 15; ++k) {
      auto [a, b] = pair_of(k);
      std::cout << a << b << "," << f.r[static_cast<std::size_t>(k)].get_str() << "\n";
    }
    return 0;
  }
  json r = json::object();
  for (int k = 0; k < 15; ++k) {
    auto [a, b] = pair_of(k);
    r[std::to_string(10 * a + b)] = f.r[static_cast<std::size_t>(k)].get_str();
  }
  std::cout << json{{"j", f.j.get_str()}, {"k", f.k.get_str()}, {"r", r}, {"admissible", f.admissible}}.dump(2) << "\n";
  return 0;
}

MeroForm apply_reduce(const MeroForm& f, const std::string& mode, const Covariant& c, bool profiled) {
  if (mode == "none") return f;
  if (mode == "auto") {
    // Multiply by the chi5 power the valuation asks for, then clear the pole.
    if (!profiled) return reduce_fully(times_chi5_power(f, needed_chi5_power(c)));
    // Generic forms have no valuation: divide as far as the box allows.
    if (f.chi5_exponent.get_den() != 1) return f;
    const long top = f.chi5_exponent.get_num().get_si();
    for (long s = top; s > 0; --s) {
      try {
        return times_chi5_power(reduce(f, static_cast<int>(s)), static_cast<int>(top - s));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotDivisibleInBox) throw;
      }
    }
    return times_chi5_power(f, static_cast<int>(top));
  }
  const auto v = int_list(mode);
  if (v.size() != 1 || v[0] < 0) throw Usage("--reduce is none, auto or a non-negative integer");
  return reduce(f, v[0]);
}

int cmd_nu(const Options& o, const std::string& profile, const std::string& reduce_mode,
           const std::vector<std::string>& coeffs) {
  const Program p = parse(read_expression(o));
  const Covariant c = evaluate(p);
  MeroForm f;
  const bool profiled = profile != "none";
  if (profiled) {
    auto pr = profile_from_name(profile);
    if (!pr) throw Usage("--profile is none, gamma0_2 or gamma2_w");
    f = profile_eval(*pr, c, o.box);
  } else {
    f = nu_eval(c, o.box);
  }
  f = apply_reduce(f, reduce_mode, c, profiled);

  std::vector<FourierIndex> idx;
  for (const auto& s : coeffs) {
    const auto v = int_list(s);
    if (v.size() != 3) throw Usage("--coeff takes n,r,m");
    idx.push_back({v[0], v[1], v[2]});
  }
  if (!o.out_dir.empty()) {
    SeriesCache out(o.out_dir);
    const auto num = f.numerator();
    for (std::size_t j = 0; j < num.size(); ++j) out.store("nu_component_" + std::to_string(j), num[j]);
    json side{{"expression", print(p)},
              {"weight", {f.weight_j, f.weight_k.get_str()}},
              {"chi5_exponent", f.chi5_exponent.get_str()},
              {"box", f.box()},
              {"profile", profile}};
    std::ofstream(std::filesystem::path(o.out_dir) / "nu.json") << side.dump(2) << "\n";
  }
  if (o.format == "csv") {
    std::cout << "n,r,m,component,value\n";
    for (const auto& i : idx) {
      const auto v = fourier_coefficient(f, i);
      for (std::size_t j = 0; j < v.size(); ++j) {
        std::cout << i.n << "," << i.r << "," << i.m << "," << j << ",\"" << v[j].to_string() << "\"\n";
      }
    }
    return 0;
  }
  json j;
  j["expression"] = print(p);
  j["weight"] = {f.weight_j, f.weight_k.get_str()};
  j["chi5_exponent"] = f.chi5_exponent.get_str();
  j["box"] = f.box();
  j["coefficients"] = json::array();
  for (const auto& i : idx) {
    json vals = json::array();
    for (const auto& z : fourier_coefficient(f, i)) vals.push_back(z.to_string());
    j["coefficients"].push_back({{"index", {i.n, i.r, i.m}}, {"values", vals}});
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify(const Options& o, const std::string& suite) {
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Usage("unknown suite '" + suite + "'");
  }
  bool ok = true;
  json report = json::array();
  if (o.format == "csv") std::cout << "suite,check,passed,detail\n";
  for (const auto& s : suites) {
    for (const auto& r : run_suite(s, o.box)) {
      ok = ok && r.passed;
      if (o.format == "csv") {
        std::cout << s << ",\"" << r.name << "\"," << (r.passed ? "true" : "false") << ",\"" << r.detail << "\"\n";
      } else {
        report.push_back({{"suite", s}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      }
    }
  }
  if (o.format != "csv") std::cout << report.dump(2) << "\n";
  return ok ? 0 : kExitFail;
}

bool usage_code(ErrorCode c) {
  return c == ErrorCode::Parse || c == ErrorCode::UnknownIdentifier || c == ErrorCode::Arity ||
         c == ErrorCode::DegreeMismatch || c == ErrorCode::TooLarge;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tautological modular forms workbench"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  auto add_box = [&](CLI::App* sub) {
    sub->add_option("-N,--box", o.box, "Box bound")->check(CLI::NonNegativeNumber);
  };
  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("--expr", o.expr, "Covariant expression");
    sub->add_option("--expr-file", o.expr_file, "File holding the expression");
  };

  std::string kind, index = "1";
  int component = 1;
  auto* theta = app.add_subcommand("theta", "Fourier expansion of a theta object in the cache format");
  theta->add_option("--kind", kind, "even, grad, chi5 or ptilde")->required();
  theta->add_option("--index", index, "Characteristic index, or two digits for ptilde");
  theta->add_option("--component", component, "Gradient component 1 or 2");
  theta->add_option("-o,--out", o.out_dir, "Directory to write into instead of stdout");
  add_box(theta);

  auto* eval = app.add_subcommand("eval", "Expand a covariant expression");
  add_expr(eval);

  auto* valuate = app.add_subcommand("valuate", "Valuations along the ten product loci");
  add_expr(valuate);

  int d = -1, b = -1;
  auto* dims = app.add_subcommand("dims", "Dimensions of graded pieces C'_{d,b}");
  dims->add_option("-d", d, "Degree");
  dims->add_option("-b", b, "Order");

  auto* dec = app.add_subcommand("decompose", "S6 isotypic decomposition of C'_{d,b}");
  dec->add_option("-d", d, "Degree")->required();
  dec->add_option("-b", b, "Order")->required();

  std::string profile = "none", reduce_mode = "none";
  std::vector<std::string> coeffs;
  auto* nu = app.add_subcommand("nu", "Fourier coefficients of the image under nu");
  add_expr(nu);
  add_box(nu);
  nu->add_option("--profile", profile, "none, gamma0_2 or gamma2_w");
  nu->add_option("--reduce", reduce_mode, "none, auto or a number of chi5 divisions");
  nu->add_option("--coeff", coeffs, "Index n,r,m (repeatable)");
  nu->add_option("-o,--out", o.out_dir, "Write components and a JSON sidecar here");

  std::string cs, ds;
  auto* div = app.add_subcommand("divisor", "Weight and vanishing orders of a divisor");
  div->add_option("--c", cs, "Ten coefficients of the H_pi, table order")->required();
  div->add_option("--d", ds, "Six coefficients of the W_i")->required();

  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite, "identities, valuations, dimensions, decompositions, divisor or all");
  add_box(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*theta) return cmd_theta(o, kind, index, component);
    if (*eval) return cmd_eval(o);
    if (*valuate) return cmd_valuate(o);
    if (*dims) return cmd_dims(o, d, b);
    if (*dec) return cmd_decompose(o, d, b);
    if (*nu) return cmd_nu(o, profile, reduce_mode, coeffs);
    if (*div) return cmd_divisor(o, cs, ds);
    if (*ver) return cmd_verify(o, suite);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return usage_code(e.code()) ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
