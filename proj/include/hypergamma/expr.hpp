#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hypergamma/ratfun.hpp"

namespace hypergamma {

// Expression trees for the text grammar shared by the CLI, identity files and
// the q-series recipes. Rationals appear as `p/q`, linear forms as `2t+1/3`,
// powers with `^`; calls take `;`-separated argument groups, e.g.
// hyper(2t, 2t+1/3; t+5/6; -1/8) or poch(a*q; q^2; inf).
enum class ExprKind { Number, Symbol, Add, Mul, Div, Pow, Call };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind;
  Rational number;                           // Number
  std::string name;                          // Symbol or Call
  std::vector<ExprPtr> args;                 // Add/Mul operands, Div [n,d], Pow [b,e]
  std::vector<std::vector<ExprPtr>> groups;  // Call arguments
};

ExprPtr expr_number(const Rational& q);
ExprPtr expr_symbol(const std::string& name);
ExprPtr expr_add(std::vector<ExprPtr> terms);
ExprPtr expr_mul(std::vector<ExprPtr> factors);
ExprPtr expr_div(ExprPtr num, ExprPtr den);
ExprPtr expr_pow(ExprPtr base, ExprPtr exp);
ExprPtr expr_call(const std::string& name, std::vector<std::vector<ExprPtr>> groups);

ExprPtr parse_expr(const std::string& text);
std::string expr_to_string(const ExprPtr& e);

// Replace every occurrence of the symbol by `value`.
ExprPtr expr_substitute(const ExprPtr& e, const std::string& symbol, const ExprPtr& value);

bool expr_equal(const ExprPtr& x, const ExprPtr& y);

// Conversions into the exact-arithmetic domain. Symbols outside the public
// alphabet are rejected here.
Rational expr_to_rational(const ExprPtr& e);
Polynomial expr_to_polynomial(const ExprPtr& e);
RationalFunction expr_to_ratfun(const ExprPtr& e);

// c0 + c1*v; rejects anything that is not linear in v over Q.
std::pair<Rational, Rational> expr_to_linear_form(const ExprPtr& e, Var v);

}  // namespace hypergamma
