#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypergamma/rational.hpp"

namespace hypergamma {

// Fixed variable alphabet. The first seven names are the public alphabet
// accepted by the expression grammar; kAux is a scratch slot used internally
// (shift-resultant computations) and rejected at parse time.
enum class Var : uint8_t { A = 0, B, C, Z, T, D, N, Aux };

inline constexpr std::size_t kNumVars = 8;
inline constexpr std::size_t kNumPublicVars = 7;

char var_name(Var v);
std::optional<Var> var_from_name(char name);

// Exponent vector over the fixed alphabet.
struct Monomial {
  std::array<uint16_t, kNumVars> e{};

  unsigned total_degree() const;
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial operator/(const Monomial& m) const;  // caller checks divides()
  bool operator==(const Monomial& m) const { return e == m.e; }
  bool is_one() const { return total_degree() == 0; }

  unsigned operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
  void set(Var v, unsigned exp) { e[static_cast<std::size_t>(v)] = static_cast<uint16_t>(exp); }
};

// Graded lexicographic order with a < b < c < z < t < d < n; comparator sorts
// descending so that map iteration starts at the leading term.
struct GrlexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

// Sparse multivariate polynomial over Q. Invariant: no stored zero
// coefficients, so structural map equality is polynomial equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(const Rational& constant);
  static Polynomial variable(Var v, unsigned exp = 1);
  static Polynomial term(const Rational& coeff, const Monomial& m);
  // Linear form c0 + c1 * v.
  static Polynomial linear(const Rational& c0, const Rational& c1, Var v);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()

  bool operator==(const Polynomial& p) const { return terms_ == p.terms_; }
  bool operator!=(const Polynomial& p) const { return !(*this == p); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& p) const;
  Polynomial operator-(const Polynomial& p) const;
  Polynomial operator*(const Polynomial& p) const;
  Polynomial& operator+=(const Polynomial& p);
  Polynomial& operator-=(const Polynomial& p);
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  unsigned total_degree() const;
  int degree_in(Var v) const;  // -1 for the zero polynomial
  bool uses(Var v) const;
  // True when every variable used lies in `allowed`.
  bool uses_only(const std::vector<Var>& allowed) const;

  // Leading term in the global grlex order.
  const Rational& leading_coefficient() const;
  const Monomial& leading_monomial() const;

  // Coefficients of powers of v, as polynomials in the other variables.
  std::map<unsigned, Polynomial> coefficients_in(Var v) const;
  Polynomial coefficient_of(Var v, unsigned power) const;
  Polynomial leading_coefficient_in(Var v) const;

  Polynomial substitute(Var v, const Rational& value) const;
  Polynomial substitute(Var v, const Polynomial& value) const;

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rational content() const;  // requires nonzero
  // this / (±content): integer, coprime, positive leading coefficient.
  Polynomial primitive_part() const;

  // Exact division; returns nullopt when q does not divide exactly.
  static std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

  // Pseudo-remainder of p by q viewed as univariate in v (standard prem).
  static Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q, Var v);

  // Primitive gcd via subresultant PRS; result is primitive with positive
  // leading coefficient (1 for coprime inputs).
  static Polynomial gcd(const Polynomial& p, const Polynomial& q);

  static Polynomial resultant(const Polynomial& p, const Polynomial& q, Var v);

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Every rational root of p (univariate in v) with multiplicity.
// Throws NotUnivariate when another variable occurs.
std::vector<Rational> rational_roots(const Polynomial& p, Var v);

// Small-integer divisor enumeration used by the root finder; exposed for
// tests. Returns all positive divisors of |n| (n != 0).
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace hypergamma
