#include "taut/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "taut/error.hpp"

namespace taut {

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.name == b.name && a.value == b.value && a.n == b.n && a.kids == b.kids;
}

bool operator==(const Program& a, const Program& b) {
  if (!(a.expr == b.expr) || a.with.size() != b.with.size()) return false;
  for (std::size_t k = 0; k < a.with.size(); ++k) {
    if (a.with[k].form != b.with[k].form || a.with[k].linear_forms != b.with[k].linear_forms) return false;
  }
  return true;
}

namespace {

std::optional<GenericForm> generic_by_name(const std::string& s) {
  for (int f = 0; f < kGenericForms; ++f) {
    if (generic_name(GenericForm(f)) == s) return GenericForm(f);
  }
  return std::nullopt;
}

// l1..l6
std::optional<int> linear_index(const std::string& s) {
  if (s.size() == 2 && s[0] == 'l' && s[1] >= '1' && s[1] <= '6') return s[1] - '0';
  return std::nullopt;
}

// p12, p21, ...
std::optional<std::pair<int, int>> pluecker_indices(const std::string& s) {
  if (s.size() != 3 || s[0] != 'p') return std::nullopt;
  const int i = s[1] - '0', j = s[2] - '0';
  if (i < 1 || i > 6 || j < 1 || j > 6 || i == j) return std::nullopt;
  return std::pair{i, j};
}

// Order in (x1, x2) read off the tree; sums take the larger side and leave
// consistency to evaluation.
int static_order(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Ident:
      if (linear_index(e.name)) return 1;
      if (auto f = generic_by_name(e.name)) return generic_degree(*f);
      return 0;
    case Expr::Kind::Number:
      return 0;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return std::max(static_order(e.kids[0]), static_order(e.kids[1]));
    case Expr::Kind::Mul:
      return static_order(e.kids[0]) + static_order(e.kids[1]);
    case Expr::Kind::Neg:
      return static_order(e.kids[0]);
    case Expr::Kind::Pow:
      return e.n * static_order(e.kids[0]);
    case Expr::Kind::Trans:
      return static_order(e.kids[0]) + static_order(e.kids[1]) - 2 * e.n;
  }
  return 0;
}

bool known_identifier(const std::string& s) {
  return s == "I5" || linear_index(s) || pluecker_indices(s) || generic_by_name(s);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Program program() {
    Program p;
    p.expr = expr();
    skip();
    if (keyword("with")) {
      do {
        p.with.push_back(binding());
      } while (accept(','));
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::Parse, msg + " at column " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool keyword(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    const std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("expected identifier");
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  mpz_class nat() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  int small_nat() {
    const std::size_t at = pos_;
    mpz_class v = nat();
    if (v > 1000) {
      pos_ = at;
      fail("exponent too large");
    }
    return static_cast<int>(v.get_si());
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      Expr::Kind k;
      if (accept('+')) {
        k = Expr::Kind::Add;
      } else if (accept('-')) {
        k = Expr::Kind::Sub;
      } else {
        return e;
      }
      Expr r = term();
      Expr node;
      node.kind = k;
      node.kids = {std::move(e), std::move(r)};
      e = std::move(node);
    }
  }

  Expr term() {
    Expr e = factor();
    while (accept('*')) {
      Expr node;
      node.kind = Expr::Kind::Mul;
      node.kids = {std::move(e), factor()};
      e = std::move(node);
    }
    return e;
  }

  Expr factor() {
    if (accept('-')) {
      Expr node;
      node.kind = Expr::Kind::Neg;
      node.kids = {factor()};
      return node;
    }
    Expr base = atom();
    if (accept('^')) {
      Expr node;
      node.kind = Expr::Kind::Pow;
      node.n = small_nat();
      node.kids = {std::move(base)};
      return node;
    }
    return base;
  }

  Expr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e;
      e.kind = Expr::Kind::Number;
      mpz_class num = nat();
      mpz_class den = 1;
      if (accept('/')) {
        den = nat();
        if (den == 0) fail("zero denominator");
      }
      e.value = mpq_class(num, den);
      e.value.canonicalize();
      return e;
    }
    const std::size_t start = pos_;
    std::string name = ident();
    if (name == "T" && accept('(')) return transvectant();
    if (!known_identifier(name)) {
      pos_ = start;
      throw Error(ErrorCode::UnknownIdentifier, "'" + name + "' at column " + std::to_string(start));
    }
    Expr e;
    e.kind = Expr::Kind::Ident;
    e.name = name;
    return e;
  }

  Expr transvectant() {
    Expr node;
    node.kind = Expr::Kind::Trans;
    node.kids.push_back(expr());
    if (!accept(',')) throw Error(ErrorCode::Arity, "T takes three arguments (column " + std::to_string(pos_) + ")");
    node.kids.push_back(expr());
    if (!accept(',')) throw Error(ErrorCode::Arity, "T takes three arguments (column " + std::to_string(pos_) + ")");
    node.n = small_nat();
    if (accept(',')) throw Error(ErrorCode::Arity, "T takes three arguments (column " + std::to_string(pos_) + ")");
    expect(')');
    const int m = std::min(static_order(node.kids[0]), static_order(node.kids[1]));
    if (node.n > m) {
      throw Error(ErrorCode::Arity, "T(.., .., " + std::to_string(node.n) + ") on operands of order " +
                                        std::to_string(m) + " (column " + std::to_string(pos_) + ")");
    }
    return node;
  }

  FormAssignment binding() {
    const std::size_t start = (skip(), pos_);
    const std::string name = ident();
    auto form = generic_by_name(name);
    if (!form) throw Error(ErrorCode::UnknownIdentifier, "'" + name + "' is not a generic form (column " +
                                                             std::to_string(start) + ")");
    expect('=');
    FormAssignment a{*form, {}};
    do {
      const std::size_t at = (skip(), pos_);
      const std::string f = ident();
      auto i = linear_index(f);
      if (!i) throw Error(ErrorCode::UnknownIdentifier, "'" + f + "' is not l1..l6 (column " + std::to_string(at) + ")");
      a.linear_forms.push_back(*i);
    } while (accept('*'));
    return a;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    case Expr::Kind::Neg:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string print_at(const Expr& e, int min_prec) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::Ident:
      s = e.name;
      break;
    case Expr::Kind::Number:
      s = e.value.get_str();
      break;
    case Expr::Kind::Add:
      s = print_at(e.kids[0], 1) + " + " + print_at(e.kids[1], 2);
      break;
    case Expr::Kind::Sub:
      s = print_at(e.kids[0], 1) + " - " + print_at(e.kids[1], 2);
      break;
    case Expr::Kind::Mul:
      s = print_at(e.kids[0], 2) + "*" + print_at(e.kids[1], 3);
      break;
    case Expr::Kind::Neg:
      s = "-" + print_at(e.kids[0], 3);
      break;
    case Expr::Kind::Pow:
      s = print_at(e.kids[0], 5) + "^" + std::to_string(e.n);
      break;
    case Expr::Kind::Trans:
      s = "T(" + print_at(e.kids[0], 0) + ", " + print_at(e.kids[1], 0) + ", " + std::to_string(e.n) + ")";
      break;
  }
  return precedence(e) >= min_prec ? s : "(" + s + ")";
}

Covariant eval(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Ident: {
      if (e.name == "I5") return discriminant_root();
      if (auto i = linear_index(e.name)) return linear_form(*i);
      if (auto ij = pluecker_indices(e.name)) return pluecker(ij->first, ij->second);
      return generic_form(*generic_by_name(e.name));
    }
    case Expr::Kind::Number:
      return constant_covariant(GaussRat(e.value));
    case Expr::Kind::Add:
      return eval(e.kids[0]) + eval(e.kids[1]);
    case Expr::Kind::Sub:
      return eval(e.kids[0]) - eval(e.kids[1]);
    case Expr::Kind::Mul:
      return eval(e.kids[0]) * eval(e.kids[1]);
    case Expr::Kind::Neg:
      return -eval(e.kids[0]);
    case Expr::Kind::Pow:
      return eval(e.kids[0]).pow(static_cast<unsigned>(e.n));
    case Expr::Kind::Trans: {
      Covariant f = eval(e.kids[0]), g = eval(e.kids[1]);
      if (e.n > std::min(f.order(), g.order())) {
        throw Error(ErrorCode::Arity, "transvectant index " + std::to_string(e.n) + " exceeds order " +
                                          std::to_string(std::min(f.order(), g.order())));
      }
      return transvectant(f, g, e.n);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "bad expression node");
}

}  // namespace

Program parse(const std::string& text) { return Parser(text).program(); }

std::string print(const Expr& e) { return print_at(e, 0); }

std::string print(const Program& p) {
  std::string s = print(p.expr);
  for (std::size_t k = 0; k < p.with.size(); ++k) {
    s += k == 0 ? " with " : ", ";
    s += std::string(generic_name(p.with[k].form)) + "=";
    for (std::size_t j = 0; j < p.with[k].linear_forms.size(); ++j) {
      if (j > 0) s += "*";
      s += "l" + std::to_string(p.with[k].linear_forms[j]);
    }
  }
  return s;
}

Covariant evaluate(const Program& p) {
  Covariant c = eval(p.expr);
  if (p.with.empty()) return c;
  return specialize_form(c, p.with);
}

}  // namespace taut
