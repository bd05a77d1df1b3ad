#include "hypergamma/ratfun.hpp"

#include <algorithm>

namespace hypergamma {

RationalFunction RationalFunction::normalize(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ZeroDenominator();
  RationalFunction f;
  if (num.is_zero()) return f;
  Polynomial n = num, d = den;
  if (!d.is_constant()) {
    Polynomial g = Polynomial::gcd(n, d);
    if (!g.is_constant()) {
      n = *Polynomial::divide_exact(n, g);
      d = *Polynomial::divide_exact(d, g);
    }
  }
  Rational lead = d.leading_coefficient();
  f.num_ = n * (Rational(1) / lead);
  f.den_ = d * (Rational(1) / lead);
  return f;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction RationalFunction::operator+(const RationalFunction& f) const {
  return normalize(num_ * f.den_ + f.num_ * den_, den_ * f.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& f) const {
  return normalize(num_ * f.den_ - f.num_ * den_, den_ * f.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& f) const {
  return normalize(num_ * f.num_, den_ * f.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& f) const {
  if (f.is_zero()) throw ZeroDenominator("division by zero rational function");
  return normalize(num_ * f.den_, den_ * f.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e == 0) return RationalFunction(Rational(1));
  if (e < 0) return RationalFunction(Rational(1)) / pow(-e);
  return normalize(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

namespace {

// p(bindings) with one shared denominator: returns (numerator, denominator).
std::pair<Polynomial, Polynomial> substitute_poly(const Polynomial& p,
                                                  const std::map<Var, RationalFunction>& bindings) {
  // Common denominator prod_v den_v^maxdeg_v avoids repeated normalization.
  std::map<Var, int> maxdeg;
  for (const auto& [v, f] : bindings) maxdeg[v] = std::max(0, p.degree_in(v));

  Polynomial den(Rational(1));
  for (const auto& [v, f] : bindings)
    den = den * f.den().pow(static_cast<unsigned>(maxdeg[v]));

  Polynomial num;
  for (const auto& [m, c] : p.terms()) {
    Polynomial term(c);
    Monomial rest = m;
    for (const auto& [v, f] : bindings) {
      unsigned e = m[v];
      rest.set(v, 0);
      term = term * f.num().pow(e) * f.den().pow(static_cast<unsigned>(maxdeg[v]) - e);
    }
    num += term * Polynomial::term(Rational(1), rest);
  }
  return {num, den};
}

}  // namespace

RationalFunction RationalFunction::substitute(const std::map<Var, RationalFunction>& bindings) const {
  auto [nn, nd] = substitute_poly(num_, bindings);
  auto [dn, dd] = substitute_poly(den_, bindings);
  if (dn.is_zero()) throw ZeroDenominator("substitution makes the denominator vanish");
  return normalize(nn * dd, nd * dn);
}

RationalFunction RationalFunction::substitute(Var v, const RationalFunction& value) const {
  return substitute(std::map<Var, RationalFunction>{{v, value}});
}

RationalFunction RationalFunction::derivative(Var v) const {
  auto dpoly = [v](const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
      unsigned e = m[v];
      if (e == 0) continue;
      Monomial dm = m;
      dm.set(v, e - 1);
      out += Polynomial::term(c * Rational(static_cast<long>(e)), dm);
    }
    return out;
  };
  return normalize(dpoly(num_) * den_ - num_ * dpoly(den_), den_ * den_);
}

Rational RationalFunction::eval(const std::map<Var, Rational>& point) const {
  auto eval_poly = [&point](const Polynomial& p) {
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
      Rational term = c;
      for (const auto& [v, x] : point) term *= rational_pow(x, m[v]);
      acc += term;
    }
    return acc;
  };
  Rational d = eval_poly(den_);
  if (d == 0) throw ZeroDenominator("evaluation at a pole");
  return eval_poly(num_) / d;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

LinearFactorization factor_linear(const RationalFunction& f, Var v) {
  if (f.is_zero()) throw NonLinearRemainder("zero has no gamma-quotient form");
  auto split = [v](const Polynomial& p) {
    auto roots = rational_roots(p, v);  // throws NotUnivariate as needed
    if (static_cast<int>(roots.size()) != p.degree_in(v))
      throw NonLinearRemainder("factor of degree >= 2 over Q in " + p.to_string());
    std::vector<Rational> shifted;
    shifted.reserve(roots.size());
    for (const auto& r : roots) shifted.push_back(-r);  // (v - r) = (v + alpha)
    std::sort(shifted.begin(), shifted.end());
    return shifted;
  };
  LinearFactorization out;
  out.alphas = split(f.num());
  out.deltas = split(f.den());
  int dn = f.num().degree_in(v), dd = f.den().degree_in(v);
  Rational lead_num = f.num().coefficient_of(v, static_cast<unsigned>(std::max(dn, 0))).constant_value();
  Rational lead_den = f.den().coefficient_of(v, static_cast<unsigned>(std::max(dd, 0))).constant_value();
  out.constant = lead_num / lead_den;
  return out;
}

}  // namespace hypergamma
