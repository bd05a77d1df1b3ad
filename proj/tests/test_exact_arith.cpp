#include <doctest.h>

#include <random>

#include "hypergamma/expr.hpp"
#include "hypergamma/ratfun.hpp"

using namespace hypergamma;

namespace {

Polynomial P(const std::string& s) { return expr_to_polynomial(parse_expr(s)); }
RationalFunction RF(const std::string& s) { return expr_to_ratfun(parse_expr(s)); }
Rational Q(const std::string& s) { return rational_from_string(s); }

Polynomial random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_terms,
                       int max_deg, int max_coeff) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::uniform_int_distribution<int> den(1, 4);
  Polynomial p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (Var v : vars) m.set(v, static_cast<unsigned>(deg(rng)));
    p += Polynomial::term(make_rational(coeff(rng), den(rng)), m);
  }
  return p;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Q("-1/8") == make_rational(-1, 8));
  CHECK(Q("16/27") * Q("27/16") == 1);
  CHECK(to_string(Q("40/81")) == "40/81");
  CHECK(is_integer(Q("6/3")));
  CHECK(is_nonpositive_integer(Q("-4")));
  CHECK(!is_nonpositive_integer(Q("1/2")));
  CHECK(rational_pow(Q("2/3"), -2) == Q("9/4"));
  CHECK(height(Q("-5/7")) == 7);
  CHECK_THROWS_AS(rational_from_string("1/0"), ZeroDenominator);
}

TEST_CASE("polynomial arithmetic and printing") {
  Polynomial p = P("t^2 - 1");
  Polynomial q = P("t - 1");
  CHECK(p == P("(t-1)(t+1)"));
  CHECK((p * q).degree_in(Var::T) == 3);
  CHECK(P("8z+1").to_string() == "8*z + 1");
  CHECK(P("0").is_zero());
  CHECK(P("2t+1/3") == Polynomial::linear(Q("1/3"), Q("2"), Var::T));
  // round-trip through the grammar
  Polynomial big = P("1 + a + b + a*b - 2c - a*c + c^2 + z");
  CHECK(P(big.to_string()) == big);
}

TEST_CASE("polynomial ring axioms on random triples") {
  std::mt19937_64 rng(20240811);
  std::vector<Var> vars{Var::A, Var::T, Var::Z};
  for (int i = 0; i < 500; ++i) {
    Polynomial x = random_poly(rng, vars, 4, 3, 6);
    Polynomial y = random_poly(rng, vars, 4, 3, 6);
    Polynomial w = random_poly(rng, vars, 4, 3, 6);
    REQUIRE((x * y) * w == x * (y * w));
    REQUIRE(x * (y + w) == x * y + x * w);
    REQUIRE(x + y == y + x);
    REQUIRE(x - x == Polynomial());
  }
}

TEST_CASE("divide_exact and gcd") {
  Polynomial p = P("(t^2-1)(2t+3)");
  auto quo = Polynomial::divide_exact(p, P("t-1"));
  REQUIRE(quo.has_value());
  CHECK(*quo == P("(t+1)(2t+3)"));
  CHECK(!Polynomial::divide_exact(p, P("t-2")).has_value());

  CHECK(Polynomial::gcd(P("t^2-1"), P("t^2-2t+1")) == P("t-1"));
  CHECK(Polynomial::gcd(P("(a+b)^2 (t-1)"), P("(a+b)(t+1)")) == P("a+b"));
  CHECK(Polynomial::gcd(P("t^2+1"), P("t+2")) == P("1"));
  // content handling: gcd is primitive with positive leading coefficient
  CHECK(Polynomial::gcd(P("4t+4"), P("6t+6")) == P("t+1"));
  CHECK(Polynomial::gcd(P("-2t-2"), P("-4t-4")) == P("t+1"));
}

TEST_CASE("gcd on random products") {
  std::mt19937_64 rng(987654);
  std::vector<Var> vars{Var::A, Var::T};
  for (int i = 0; i < 60; ++i) {
    Polynomial g = random_poly(rng, vars, 3, 2, 4);
    if (g.is_zero()) continue;
    Polynomial x = random_poly(rng, vars, 3, 2, 4);
    Polynomial y = random_poly(rng, vars, 3, 2, 4);
    if (x.is_zero() || y.is_zero()) continue;
    Polynomial d = Polynomial::gcd(x * g, y * g);
    // gcd must contain the planted factor
    REQUIRE(Polynomial::divide_exact(d, Polynomial::gcd(g, g)).has_value());
    REQUIRE(Polynomial::divide_exact(x * g, d).has_value());
    REQUIRE(Polynomial::divide_exact(y * g, d).has_value());
  }
}

TEST_CASE("resultant") {
  // res_t((t-a)(t-b)...) vanishes iff common root
  Polynomial r = Polynomial::resultant(P("t-a"), P("t-a"), Var::T);
  CHECK(r.is_zero());
  Polynomial r2 = Polynomial::resultant(P("t-a"), P("t-b"), Var::T);
  CHECK(!r2.is_zero());
  CHECK(r2.uses_only({Var::A, Var::B}));
  // classic: res_x(x^2-1, x-2) = 3
  Polynomial r3 = Polynomial::resultant(P("t^2-1"), P("t-2"), Var::T);
  CHECK(r3 == P("3"));
}

TEST_CASE("normalize examples") {
  // (t^2-1)/(t-1) -> t+1
  CHECK(RationalFunction::normalize(P("t^2-1"), P("t-1")) == RF("t+1"));
  // (0, 7t) -> 0/1
  RationalFunction zero = RationalFunction::normalize(P("0"), P("7t"));
  CHECK(zero.is_zero());
  CHECK(zero.den() == P("1"));
  // (16t+40/3, 27t+18) -> (16/27)(t+5/6)/(t+2/3), i.e. num (16/27)t+40/81, den monic
  RationalFunction f = RationalFunction::normalize(P("16t+40/3"), P("27t+18"));
  CHECK(f.num() == P("(16/27)t + 40/81"));
  CHECK(f.den() == P("t + 2/3"));
  CHECK(f == RF("(16/27)(t+5/6)/(t+2/3)"));
  CHECK_THROWS_AS(RationalFunction::normalize(P("1"), P("0")), ZeroDenominator);
}

TEST_CASE("normalize is idempotent (structural)") {
  std::mt19937_64 rng(20250810);
  std::vector<Var> vars{Var::T, Var::Z};
  for (int i = 0; i < 100; ++i) {
    Polynomial n = random_poly(rng, vars, 3, 3, 5);
    Polynomial d = random_poly(rng, vars, 3, 3, 5);
    if (d.is_zero()) continue;
    RationalFunction f = RationalFunction::normalize(n, d);
    RationalFunction g = RationalFunction::normalize(f.num(), f.den());
    REQUIRE(f == g);
  }
}

TEST_CASE("substitute") {
  // f = z/a, {a -> 2t, z -> -1/8} -> -1/(16t)
  RationalFunction f = RF("z/a");
  std::map<Var, RationalFunction> bind{{Var::A, RF("2t")}, {Var::Z, RF("-1/8")}};
  CHECK(f.substitute(bind) == RF("-1/(16t)"));
  // shift: (t+1)/(t+2) under t -> t+1
  CHECK(RF("(t+1)/(t+2)").substitute(Var::T, RF("t+1")) == RF("(t+2)/(t+3)"));
  // denominator collapse
  CHECK_THROWS_AS(RF("1/(t-1)").substitute(Var::T, RF("1")), ZeroDenominator);
}

TEST_CASE("rational_roots") {
  CHECK(rational_roots(P("8z+1"), Var::Z) == std::vector<Rational>{Q("-1/8")});
  CHECK(rational_roots(P("t^2+1"), Var::T).empty());
  // (4t-1)(4t+1)t -> {0, 1/4, -1/4} with multiplicity, sorted
  auto roots = rational_roots(P("(4t-1)(4t+1)t"), Var::T);
  CHECK(roots == std::vector<Rational>{Q("-1/4"), Q("0"), Q("1/4")});
  // multiplicity
  CHECK(rational_roots(P("(2t-3)^2"), Var::T) == std::vector<Rational>{Q("3/2"), Q("3/2")});
  CHECK_THROWS_AS(rational_roots(P("t+z"), Var::T), NotUnivariate);
}

TEST_CASE("rational_roots vs substitution, with random non-roots") {
  std::mt19937_64 rng(424242);
  Polynomial p = P("(3t-1)(2t+5)(t-4)t^2");
  auto roots = rational_roots(p, Var::T);
  REQUIRE(roots.size() == 5);
  for (const auto& r : roots) CHECK(p.substitute(Var::T, r).is_zero());
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 12);
  int checked = 0;
  while (checked < 100) {
    Rational x = make_rational(num(rng), den(rng));
    if (std::find(roots.begin(), roots.end(), x) != roots.end()) continue;
    ++checked;
    CHECK(!p.substitute(Var::T, x).is_zero());
  }
}

TEST_CASE("factor_linear") {
  auto f = factor_linear(RF("(16/27)(t+5/6)/(t+2/3)"), Var::T);
  CHECK(f.constant == Q("16/27"));
  CHECK(f.alphas == std::vector<Rational>{Q("5/6")});
  CHECK(f.deltas == std::vector<Rational>{Q("2/3")});

  auto one = factor_linear(RF("1"), Var::T);
  CHECK(one.constant == 1);
  CHECK(one.alphas.empty());
  CHECK(one.deltas.empty());

  CHECK_THROWS_AS(factor_linear(RF("(t^2+1)/(t+1)"), Var::T), NonLinearRemainder);
}

TEST_CASE("factor_linear round-trip") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 6);
  for (int i = 0; i < 40; ++i) {
    Rational c = make_rational(num(rng) == 0 ? 1 : num(rng), den(rng));
    Polynomial n(c), d(Rational(1));
    std::vector<Rational> alphas, deltas;
    for (int j = 0; j < 2; ++j) {
      alphas.push_back(make_rational(num(rng), den(rng)));
      deltas.push_back(make_rational(num(rng), den(rng)));
      n = n * Polynomial::linear(alphas.back(), Rational(1), Var::T);
      d = d * Polynomial::linear(deltas.back(), Rational(1), Var::T);
    }
    RationalFunction f = RationalFunction::normalize(n, d);
    auto fac = factor_linear(f, Var::T);
    // recompose
    Polynomial rn(fac.constant), rd(Rational(1));
    for (const auto& a : fac.alphas) rn = rn * Polynomial::linear(a, Rational(1), Var::T);
    for (const auto& dl : fac.deltas) rd = rd * Polynomial::linear(dl, Rational(1), Var::T);
    REQUIRE(RationalFunction::normalize(rn, rd) == f);
  }
}
