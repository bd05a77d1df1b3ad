#pragma once

#include <map>
#include <string>
#include <vector>

#include "hypergamma/polynomial.hpp"

namespace hypergamma {

// Normalized quotient of polynomials over Q: gcd(num, den) = 1 and the
// denominator is monic under the global grlex order (so its leading
// coefficient is positive and equal quotients compare structurally equal).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}

  // normalize(num, den); throws ZeroDenominator when den = 0.
  static RationalFunction normalize(const Polynomial& num, const Polynomial& den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }

  bool operator==(const RationalFunction& f) const { return num_ == f.num_ && den_ == f.den_; }
  bool operator!=(const RationalFunction& f) const { return !(*this == f); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& f) const;
  RationalFunction operator-(const RationalFunction& f) const;
  RationalFunction operator*(const RationalFunction& f) const;
  RationalFunction operator/(const RationalFunction& f) const;
  RationalFunction pow(int e) const;

  bool uses(Var v) const { return num_.uses(v) || den_.uses(v); }

  // Simultaneous substitution, re-normalized. Throws ZeroDenominator when the
  // denominator collapses to zero.
  RationalFunction substitute(const std::map<Var, RationalFunction>& bindings) const;
  RationalFunction substitute(Var v, const RationalFunction& value) const;

  // d/dv, the usual quotient rule.
  RationalFunction derivative(Var v) const;

  Rational eval(const std::map<Var, Rational>& point) const;

  std::string to_string() const;

 private:
  Polynomial num_, den_;
};

// f = constant * prod (v + alpha_i) / prod (v + delta_j), multiplicities kept.
struct LinearFactorization {
  Rational constant;
  std::vector<Rational> alphas;  // sorted
  std::vector<Rational> deltas;  // sorted
};

// Throws NonLinearRemainder when an irreducible factor of degree >= 2
// remains, NotUnivariate when another variable occurs.
LinearFactorization factor_linear(const RationalFunction& f, Var v);

}  // namespace hypergamma
