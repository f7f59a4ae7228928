#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "taut/covariant.hpp"

namespace taut {

/// Syntax tree of the covariant expression language.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' nat)?
///   atom   := ident | rational | '(' expr ')' | 'T(' expr ',' expr ',' nat ')'
///
/// followed by an optional `with name=l_i*l_j*..., ...` clause.
struct Expr {
  enum class Kind { Ident, Number, Add, Sub, Mul, Pow, Neg, Trans };

  Kind kind = Kind::Number;
  std::string name;      // Ident
  mpq_class value;       // Number
  int n = 0;             // Pow exponent, Trans index
  std::vector<Expr> kids;

  friend bool operator==(const Expr& a, const Expr& b);
};

struct Program {
  Expr expr;
  std::vector<FormAssignment> with;

  friend bool operator==(const Program& a, const Program& b);
};

/// Throws Parse (with the 0-based column), UnknownIdentifier or Arity.
Program parse(const std::string& text);

/// Canonical text: minimal parentheses, single spaces around + and -, none elsewhere.
std::string print(const Expr& e);
std::string print(const Program& p);

/// Evaluates the tree and applies the `with` clause. Throws Arity when a
/// transvectant index exceeds an operand's order, Grading on inconsistent sums.
Covariant evaluate(const Program& p);

}  // namespace taut
