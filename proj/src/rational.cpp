#include "hypergamma/rational.hpp"

namespace hypergamma {

Rational rational_from_string(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
  if (q.get_den() == 0) throw ZeroDenominator("rational literal '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  bool neg = e < 0;
  unsigned long ue = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (neg && q == 0) throw ZeroDenominator("0 raised to a negative power");
  Rational base = neg ? Rational(1) / q : q;
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), ue);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), ue);
  // base is canonical, so the power is as well.
  return out;
}

Integer height(const Rational& q) {
  Integer n = abs(Integer(q.get_num()));
  Integer d = q.get_den();
  return n > d ? n : d;
}

Rational rational_gcd(const Rational& x, const Rational& y) {
  if (x == 0) return abs(y);
  if (y == 0) return abs(x);
  Integer num, den;
  mpz_gcd(num.get_mpz_t(), x.get_num_mpz_t(), y.get_num_mpz_t());
  mpz_lcm(den.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  Rational g(num, den);
  g.canonicalize();
  return abs(g);
}

}  // namespace hypergamma
