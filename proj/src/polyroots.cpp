#include <algorithm>

#include "hypergamma/polynomial.hpp"

namespace hypergamma {

namespace {

// Brent-cycle Pollard rho; n odd composite > 1.
Integer pollard_rho(const Integer& n) {
  if (n % 2 == 0) return Integer(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed);
  while (true) {
    Integer y = rng.get_z_range(n - 3) + 2;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer x = y, d(1), q(1), ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](Integer& v) { v = (v * v + c) % n; };
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = q * abs(x - y) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n) return d;
  }
}

void factorize(Integer n, std::map<Integer, unsigned>& out) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    while (n % p == 0) {
      ++out[Integer(static_cast<long>(p))];
      n /= p;
    }
  }
  unsigned long p = 17;
  while (n > 1 && Integer(p) * p <= n && p < 1000000ul) {
    while (n % p == 0) {
      ++out[Integer(static_cast<long>(p))];
      n /= p;
    }
    p += 2;
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factorize(d, out);
  factorize(n / d, out);
}

}  // namespace

std::vector<Integer> positive_divisors(const Integer& n) {
  std::map<Integer, unsigned> fac;
  factorize(abs(n), fac);
  std::vector<Integer> divisors{Integer(1)};
  for (const auto& [p, e] : fac) {
    std::size_t base = divisors.size();
    Integer pk(1);
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(divisors[j] * pk);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

namespace {

Rational eval_univariate(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Synthetic division by (x - r); exact when r is a root.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& r) {
  std::vector<Rational> out(coeffs.size() - 1, Rational(0));
  Rational acc = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    out[i] = acc;
    acc = coeffs[i] + acc * r;
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p, Var v) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var other = static_cast<Var>(i);
    if (other != v && p.uses(other))
      throw NotUnivariate(std::string("unexpected variable '") + var_name(other) + "'");
  }
  std::vector<Rational> roots;
  if (p.is_constant()) return roots;

  int deg = p.degree_in(v);
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) coeffs[m[v]] = c;

  // Pull out x^k: root 0 with multiplicity k.
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  for (std::size_t i = 0; i < low; ++i) roots.emplace_back(0);
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(low));
  if (coeffs.size() == 1) return roots;

  // Scale to coprime integer coefficients.
  Integer den_lcm(1);
  for (const auto& c : coeffs) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> zc;
  zc.reserve(coeffs.size());
  Integer g(0);
  for (const auto& c : coeffs) {
    Rational scaled = c * Rational(den_lcm);
    zc.push_back(Integer(scaled.get_num()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), zc.back().get_mpz_t());
  }
  for (auto& c : zc) c /= g;

  // Candidate roots ±u/w with u | trailing and w | leading coefficient.
  auto us = positive_divisors(zc.front());
  auto ws = positive_divisors(zc.back());
  std::vector<Rational> candidates;
  for (const auto& u : us)
    for (const auto& w : ws) {
      Rational cand(u, w);
      cand.canonicalize();
      candidates.push_back(cand);
      candidates.push_back(-cand);
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Rational> work(coeffs);
  for (const auto& cand : candidates) {
    while (work.size() > 1 && eval_univariate(work, cand) == 0) {
      roots.push_back(cand);
      work = deflate(work, cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hypergamma
