#include "hypergamma/expr.hpp"

#include <cctype>
#include <sstream>

namespace hypergamma {

ExprPtr expr_number(const Rational& q) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Number;
  e->number = q;
  return e;
}

ExprPtr expr_symbol(const std::string& name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Symbol;
  e->name = name;
  return e;
}

ExprPtr expr_add(std::vector<ExprPtr> terms) {
  if (terms.size() == 1) return terms.front();
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Add;
  e->args = std::move(terms);
  return e;
}

ExprPtr expr_mul(std::vector<ExprPtr> factors) {
  if (factors.size() == 1) return factors.front();
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Mul;
  e->args = std::move(factors);
  return e;
}

ExprPtr expr_div(ExprPtr num, ExprPtr den) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Div;
  e->args = {std::move(num), std::move(den)};
  return e;
}

ExprPtr expr_pow(ExprPtr base, ExprPtr exp) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Pow;
  e->args = {std::move(base), std::move(exp)};
  return e;
}

ExprPtr expr_call(const std::string& name, std::vector<std::vector<ExprPtr>> groups) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Call;
  e->name = name;
  e->groups = std::move(groups);
  return e;
}

namespace {

struct Token {
  enum Kind { Number, Ident, Op, End } kind;
  std::string text;
  Integer value;  // Number
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::End, "", Integer(0)};
      return;
    }
    char ch = text_[pos_];
    if (isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits = text_.substr(start, pos_ - start);
      tok_ = {Token::Number, digits, Integer(digits)};
      return;
    }
    if (isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      // `qbinom-exp` carries a hyphen in the file grammar.
      if (name == "qbinom" && text_.compare(pos_, 4, "-exp") == 0) {
        name = "qbinom-exp";
        pos_ += 4;
      }
      tok_ = {Token::Ident, name, Integer(0)};
      return;
    }
    static const std::string ops = "+-*/^(),;";
    if (ops.find(ch) != std::string::npos) {
      ++pos_;
      tok_ = {Token::Op, std::string(1, ch), Integer(0)};
      return;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse() {
    ExprPtr e = parse_sum();
    if (lex_.peek().kind != Token::End)
      throw ParseError("trailing input near '" + lex_.peek().text + "'");
    return e;
  }

 private:
  bool at_op(const char* op) const {
    return lex_.peek().kind == Token::Op && lex_.peek().text == op;
  }

  void expect(const char* op) {
    if (!at_op(op)) throw ParseError(std::string("expected '") + op + "'");
    lex_.next();
  }

  static ExprPtr negated(ExprPtr e) {
    if (e->kind == ExprKind::Number) return expr_number(-e->number);
    if (e->kind == ExprKind::Mul && e->args.front()->kind == ExprKind::Number) {
      auto copy = e->args;
      copy.front() = expr_number(-copy.front()->number);
      return expr_mul(std::move(copy));
    }
    return expr_mul({expr_number(Rational(-1)), std::move(e)});
  }

  ExprPtr parse_sum() {
    std::vector<ExprPtr> terms;
    bool negate = false;
    if (at_op("-")) {
      lex_.next();
      negate = true;
    } else if (at_op("+")) {
      lex_.next();
    }
    ExprPtr first = parse_product();
    terms.push_back(negate ? negated(first) : first);
    while (at_op("+") || at_op("-")) {
      bool minus = lex_.peek().text == "-";
      lex_.next();
      ExprPtr t = parse_product();
      terms.push_back(minus ? negated(t) : t);
    }
    return expr_add(std::move(terms));
  }

  bool starts_atom() const {
    const Token& t = lex_.peek();
    return t.kind == Token::Number || t.kind == Token::Ident ||
           (t.kind == Token::Op && t.text == "(");
  }

  static bool is_number(const ExprPtr& e) { return e->kind == ExprKind::Number; }

  ExprPtr parse_product() {
    ExprPtr acc = parse_power();
    while (true) {
      if (at_op("*")) {
        lex_.next();
        ExprPtr rhs = parse_power();
        acc = (is_number(acc) && is_number(rhs)) ? expr_number(acc->number * rhs->number)
                                                 : expr_mul({acc, rhs});
      } else if (at_op("/")) {
        lex_.next();
        ExprPtr rhs = parse_power();
        if (is_number(acc) && is_number(rhs)) {
          if (rhs->number == 0) throw ZeroDenominator("literal division by zero");
          acc = expr_number(acc->number / rhs->number);
        } else {
          acc = expr_div(acc, rhs);
        }
      } else if (starts_atom()) {
        // Juxtaposition, e.g. `2t`.
        acc = expr_mul({acc, parse_power()});
      } else {
        return acc;
      }
    }
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (at_op("^")) {
      lex_.next();
      bool neg = false;
      if (at_op("-")) {
        lex_.next();
        neg = true;
      }
      ExprPtr exp = parse_power();  // right associative
      if (neg) exp = negated(exp);
      if (is_number(base) && is_number(exp) && is_integer(exp->number) &&
          mpz_fits_slong_p(exp->number.get_num_mpz_t()))
        return expr_number(rational_pow(base->number, exp->number.get_num().get_si()));
      return expr_pow(base, exp);
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Number) {
      Token n = lex_.next();
      return expr_number(Rational(n.value));
    }
    if (t.kind == Token::Ident) {
      Token id = lex_.next();
      if (at_op("(")) {
        lex_.next();
        std::vector<std::vector<ExprPtr>> groups;
        groups.emplace_back();
        while (true) {
          groups.back().push_back(parse_sum());
          if (at_op(",")) {
            lex_.next();
          } else if (at_op(";")) {
            lex_.next();
            groups.emplace_back();
          } else {
            break;
          }
        }
        expect(")");
        return expr_call(id.text, std::move(groups));
      }
      return expr_symbol(id.text);
    }
    if (at_op("(")) {
      lex_.next();
      ExprPtr e = parse_sum();
      expect(")");
      return e;
    }
    throw ParseError("expected an expression near '" + t.text + "'");
  }

  Lexer lex_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
      return 1;
    case ExprKind::Mul:
    case ExprKind::Div:
      return 2;
    case ExprKind::Pow:
      return 3;
    default:
      return 4;
  }
}

bool has_negative_lead(const ExprPtr& e) {
  if (e->kind == ExprKind::Number) return e->number < 0;
  if (e->kind == ExprKind::Mul) return has_negative_lead(e->args.front());
  return false;
}

// e with its leading numeric sign flipped; only valid when has_negative_lead.
ExprPtr strip_negative_lead(const ExprPtr& e) {
  if (e->kind == ExprKind::Number) return expr_number(-e->number);
  auto factors = e->args;
  factors.front() = strip_negative_lead(factors.front());
  if (factors.front()->kind == ExprKind::Number && factors.front()->number == 1 &&
      factors.size() > 1)
    factors.erase(factors.begin());
  return expr_mul(std::move(factors));
}

void print(const ExprPtr& e, std::ostream& out, int parent_prec) {
  int prec = precedence(*e);
  bool need_paren = prec < parent_prec;
  if (e->kind == ExprKind::Number && (e->number < 0 || !is_integer(e->number)))
    need_paren = parent_prec >= 2;
  if (e->kind == ExprKind::Mul && has_negative_lead(e)) need_paren = parent_prec >= 2;
  if (need_paren) out << "(";
  switch (e->kind) {
    case ExprKind::Number:
      out << to_string(e->number);
      break;
    case ExprKind::Symbol:
      out << e->name;
      break;
    case ExprKind::Add: {
      bool first = true;
      for (const auto& t : e->args) {
        ExprPtr term = t;
        if (has_negative_lead(term)) {
          out << (first ? "-" : " - ");
          term = strip_negative_lead(term);
        } else if (!first) {
          out << " + ";
        }
        first = false;
        print(term, out, 1);
      }
      break;
    }
    case ExprKind::Mul: {
      ExprPtr head = e;
      if (has_negative_lead(e)) {
        out << "-";
        head = strip_negative_lead(e);
        if (head->kind != ExprKind::Mul) {
          print(head, out, 2);
          break;
        }
      }
      bool first = true;
      for (const auto& f : head->args) {
        if (!first) out << "*";
        first = false;
        print(f, out, 2);
      }
      break;
    }
    case ExprKind::Div:
      print(e->args[0], out, 2);
      out << " / ";
      print(e->args[1], out, 3);
      break;
    case ExprKind::Pow:
      print(e->args[0], out, 4);
      out << "^";
      print(e->args[1], out, 4);
      break;
    case ExprKind::Call: {
      out << e->name << "(";
      bool first_group = true;
      for (const auto& g : e->groups) {
        if (!first_group) out << "; ";
        first_group = false;
        bool first = true;
        for (const auto& a : g) {
          if (!first) out << ", ";
          first = false;
          print(a, out, 0);
        }
      }
      out << ")";
      break;
    }
  }
  if (need_paren) out << ")";
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string expr_to_string(const ExprPtr& e) {
  std::ostringstream out;
  print(e, out, 0);
  return out.str();
}

ExprPtr expr_substitute(const ExprPtr& e, const std::string& symbol, const ExprPtr& value) {
  switch (e->kind) {
    case ExprKind::Number:
      return e;
    case ExprKind::Symbol:
      return e->name == symbol ? value : e;
    default: {
      auto copy = std::make_shared<Expr>(*e);
      for (auto& a : copy->args) a = expr_substitute(a, symbol, value);
      for (auto& g : copy->groups)
        for (auto& a : g) a = expr_substitute(a, symbol, value);
      return copy;
    }
  }
}

bool expr_equal(const ExprPtr& x, const ExprPtr& y) {
  if (x->kind != y->kind || x->name != y->name) return false;
  if (x->kind == ExprKind::Number) return x->number == y->number;
  if (x->args.size() != y->args.size() || x->groups.size() != y->groups.size()) return false;
  for (std::size_t i = 0; i < x->args.size(); ++i)
    if (!expr_equal(x->args[i], y->args[i])) return false;
  for (std::size_t i = 0; i < x->groups.size(); ++i) {
    if (x->groups[i].size() != y->groups[i].size()) return false;
    for (std::size_t j = 0; j < x->groups[i].size(); ++j)
      if (!expr_equal(x->groups[i][j], y->groups[i][j])) return false;
  }
  return true;
}

Rational expr_to_rational(const ExprPtr& e) {
  RationalFunction f = expr_to_ratfun(e);
  if (!f.is_constant()) throw ParseError("expected a rational constant: " + expr_to_string(e));
  return f.constant_value();
}

Polynomial expr_to_polynomial(const ExprPtr& e) {
  RationalFunction f = expr_to_ratfun(e);
  if (!f.is_polynomial()) throw ParseError("expected a polynomial: " + expr_to_string(e));
  return f.num();
}

RationalFunction expr_to_ratfun(const ExprPtr& e) {
  switch (e->kind) {
    case ExprKind::Number:
      return RationalFunction(e->number);
    case ExprKind::Symbol: {
      if (e->name.size() == 1) {
        auto v = var_from_name(e->name[0]);
        if (v) return RationalFunction(Polynomial::variable(*v));
      }
      throw ParseError("symbol '" + e->name + "' is outside the alphabet {a,b,c,z,t,d,n}");
    }
    case ExprKind::Add: {
      RationalFunction acc;
      for (const auto& t : e->args) acc = acc + expr_to_ratfun(t);
      return acc;
    }
    case ExprKind::Mul: {
      RationalFunction acc(Rational(1));
      for (const auto& f : e->args) acc = acc * expr_to_ratfun(f);
      return acc;
    }
    case ExprKind::Div:
      return expr_to_ratfun(e->args[0]) / expr_to_ratfun(e->args[1]);
    case ExprKind::Pow: {
      RationalFunction base = expr_to_ratfun(e->args[0]);
      RationalFunction exp = expr_to_ratfun(e->args[1]);
      if (!exp.is_constant() || !is_integer(exp.constant_value()))
        throw ParseError("exponent must be an integer here: " + expr_to_string(e));
      long n = static_cast<long>(exp.constant_value().get_num().get_si());
      return base.pow(static_cast<int>(n));
    }
    case ExprKind::Call:
      throw ParseError("function '" + e->name + "' is not valid in a polynomial context");
  }
  throw ParseError("unreachable");
}

std::pair<Rational, Rational> expr_to_linear_form(const ExprPtr& e, Var v) {
  Polynomial p = expr_to_polynomial(e);
  if (!p.uses_only({v}) || p.degree_in(v) > 1)
    throw ParseError("expected a linear form in '" + std::string(1, var_name(v)) +
                     "': " + expr_to_string(e));
  return {p.coefficient_of(v, 0).constant_value(), p.coefficient_of(v, 1).constant_value()};
}

}  // namespace hypergamma
