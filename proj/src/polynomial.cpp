#include "hypergamma/polynomial.hpp"

#include <random>
#include <algorithm>
#include <sstream>

namespace hypergamma {

namespace {
constexpr const char kVarNames[kNumVars + 1] = "abcztdn#";
}

char var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(char name) {
  for (std::size_t i = 0; i < kNumPublicVars; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] + m.e[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) r.e[i] = static_cast<uint16_t>(e[i] - m.e[i]);
  return r;
}

bool GrlexGreater::operator()(const Monomial& x, const Monomial& y) const {
  unsigned dx = x.total_degree(), dy = y.total_degree();
  if (dx != dy) return dx > dy;
  // Lexicographic tie-break on a < b < c < ...: higher power of the earliest
  // differing variable ranks first.
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (x.e[i] != y.e[i]) return x.e[i] > y.e[i];
  return false;
}

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(Var v, unsigned exp) {
  Polynomial p;
  if (exp == 0) return Polynomial(Rational(1));
  Monomial m;
  m.set(v, exp);
  p.terms_.emplace(m, Rational(1));
  return p;
}

Polynomial Polynomial::term(const Rational& coeff, const Monomial& m) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(m, coeff);
  return p;
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1, Var v) {
  Polynomial p(c0);
  if (c1 != 0) {
    Monomial m;
    m.set(v, 1);
    p.terms_.emplace(m, c1);
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const { return is_constant() && constant_value() == 1; }

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& p) const {
  Polynomial r = *this;
  r += p;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, c);
  return *this;
}

Polynomial Polynomial::operator-(const Polynomial& p) const {
  Polynomial r = *this;
  r -= p;
  return r;
}

Polynomial& Polynomial::operator-=(const Polynomial& p) {
  for (const auto& [m, c] : p.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& p) const {
  Polynomial r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : p.terms_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial();
  Polynomial r = *this;
  for (auto& [m, coeff] : r.terms_) coeff *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

int Polynomial::degree_in(Var v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[v]));
  return d;
}

bool Polynomial::uses(Var v) const {
  for (const auto& [m, c] : terms_)
    if (m[v] > 0) return true;
  return false;
}

bool Polynomial::uses_only(const std::vector<Var>& allowed) const {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    if (uses(v) && std::find(allowed.begin(), allowed.end(), v) == allowed.end()) return false;
  }
  return true;
}

const Rational& Polynomial::leading_coefficient() const { return terms_.begin()->second; }

const Monomial& Polynomial::leading_monomial() const { return terms_.begin()->first; }

std::map<unsigned, Polynomial> Polynomial::coefficients_in(Var v) const {
  std::map<unsigned, Polynomial> out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    unsigned p = m[v];
    rest.set(v, 0);
    out[p].add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::coefficient_of(Var v, unsigned power) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    if (m[v] != power) continue;
    Monomial rest = m;
    rest.set(v, 0);
    out.add_term(rest, c);
  }
  return out;
}

Polynomial Polynomial::leading_coefficient_in(Var v) const {
  int d = degree_in(v);
  return coefficient_of(v, d < 0 ? 0 : static_cast<unsigned>(d));
}

Polynomial Polynomial::substitute(Var v, const Rational& value) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    rest.set(v, 0);
    out.add_term(rest, c * rational_pow(value, m[v]));
  }
  return out;
}

Polynomial Polynomial::substitute(Var v, const Polynomial& value) const {
  // Horner over descending powers of v.
  auto coeffs = coefficients_in(v);
  Polynomial out;
  int prev = -1;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    if (prev >= 0)
      for (int i = 0; i < prev - static_cast<int>(it->first); ++i) out = out * value;
    out += it->second;
    prev = static_cast<int>(it->first);
  }
  if (prev > 0)
    for (int i = 0; i < prev; ++i) out = out * value;
  return out;
}

Rational Polynomial::content() const {
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  return *this * (Rational(1) / c);
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) return std::nullopt;
  if (q.is_constant()) return p * (Rational(1) / q.constant_value());
  Polynomial rem = p, quo;
  const Monomial& qm = q.leading_monomial();
  const Rational& qc = q.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (!qm.divides(rm)) return std::nullopt;
    Rational c = rem.leading_coefficient() / qc;
    Monomial m = rm / qm;
    Polynomial t = Polynomial::term(c, m);
    quo += t;
    rem -= t * q;
  }
  return quo;
}

Polynomial Polynomial::pseudo_remainder(const Polynomial& p, const Polynomial& q, Var v) {
  int dq = q.degree_in(v);
  Polynomial lq = q.leading_coefficient_in(v);
  Polynomial rem = p;
  int dr = rem.degree_in(v);
  while (!rem.is_zero() && dr >= dq) {
    Polynomial lr = rem.leading_coefficient_in(v);
    // rem := lq*rem - lr*v^(dr-dq)*q kills the leading v-term.
    Polynomial shift = Polynomial::variable(v, static_cast<unsigned>(dr - dq));
    rem = rem * lq - lr * shift * q;
    dr = rem.degree_in(v);
  }
  return rem;
}

namespace {

// Subresultant PRS on primitive inputs, univariate in v with polynomial
// coefficients. Returns the last nonzero remainder.
Polynomial subresultant_last(Polynomial f, Polynomial g, Var v) {
  if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
  Polynomial h(Rational(1)), s(Rational(1));
  while (true) {
    int df = f.degree_in(v), dg = g.degree_in(v);
    int delta = df - dg;
    Polynomial rem = Polynomial::pseudo_remainder(f, g, v);
    if (rem.is_zero()) return g;
    if (rem.degree_in(v) == 0) return rem;
    Polynomial divisor = s * h.pow(static_cast<unsigned>(delta));
    auto reduced = Polynomial::divide_exact(rem, divisor);
    // Subresultant theory guarantees exactness; fall back defensively.
    Polynomial next = reduced ? *reduced : rem;
    f = g;
    g = next;
    s = f.leading_coefficient_in(v);
    if (delta >= 1) {
      Polynomial num = s.pow(static_cast<unsigned>(delta));
      auto hh = Polynomial::divide_exact(num, h.pow(static_cast<unsigned>(delta - 1)));
      h = hh ? *hh : num;
    } else {
      h = s;
    }
  }
}

std::optional<Var> main_variable(const Polynomial& p, const Polynomial& q) {
  for (int i = kNumVars - 1; i >= 0; --i) {
    Var v = static_cast<Var>(i);
    if (p.uses(v) || q.uses(v)) return v;
  }
  return std::nullopt;
}

// Dense univariate gcd degree over Q; coefficients normalized monic each
// round to tame growth.
int dense_gcd_degree(std::vector<Rational> f, std::vector<Rational> g) {
  auto trim = [](std::vector<Rational>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(f);
  trim(g);
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    while (f.size() >= g.size()) {  // f := f mod g
      Rational factor = f.back() / g.back();
      std::size_t off = f.size() - g.size();
      for (std::size_t j = 0; j < g.size(); ++j) f[off + j] -= factor * g[j];
      trim(f);
    }
    std::swap(f, g);
  }
  return static_cast<int>(f.size()) - 1;
}

// Exact division requiring an integer quotient (divisor primitive over Z).
bool divides_over_z(const Polynomial& p, const Polynomial& g) {
  auto quo = Polynomial::divide_exact(p, g);
  if (!quo) return false;
  for (const auto& [m, c] : quo->terms())
    if (c.get_den() != 1) return false;
  return true;
}

// Heuristic gcd (GCDHEU): evaluate a variable at a large integer, take the
// gcd of the images recursively, lift back through balanced base-xi digits
// and certify by integer trial division. Inputs must have integer
// coefficients; the result is primitive times the integer content gcd.
std::optional<Polynomial> gcdheu(const Polynomial& p, const Polynomial& q, int depth) {
  if (depth > 6 || p.is_zero() || q.is_zero()) return std::nullopt;

  // Split integer contents: the gcd of two primitives is primitive, so any
  // content in the lift below is evaluation junk and gets stripped.
  Rational cp = p.content(), cq = q.content();
  Rational c = rational_gcd(cp, cq);
  Polynomial pp = p.primitive_part(), qq = q.primitive_part();
  if (pp.is_constant() || qq.is_constant()) return Polynomial(c);

  std::optional<Var> v;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (pp.uses(static_cast<Var>(i)) || qq.uses(static_cast<Var>(i))) {
      v = static_cast<Var>(i);
      break;
    }
  if (!v) return std::nullopt;

  Integer maxc(0);
  for (const auto* poly : {&pp, &qq})
    for (const auto& [m, coeff] : poly->terms()) {
      Integer a = abs(Integer(coeff.get_num()));
      if (a > maxc) maxc = a;
    }
  Integer xi = 2 * maxc + 29;

  for (int attempt = 0; attempt < 4; ++attempt) {
    Polynomial ip = pp.substitute(*v, Rational(xi));
    Polynomial iq = qq.substitute(*v, Rational(xi));
    if (!ip.is_zero() && !iq.is_zero()) {
      auto img = gcdheu(ip, iq, depth + 1);
      if (img && !img->is_zero()) {
        // Lift: balanced base-xi digits are polynomials in the other vars.
        Polynomial g;
        Polynomial e = *img;
        unsigned power = 0;
        Rational half_xi = Rational(xi) / 2;
        while (!e.is_zero() && power < 64) {
          Polynomial digit;
          for (const auto& [m, coeff] : e.terms()) {
            Integer r;
            mpz_fdiv_r(r.get_mpz_t(), coeff.get_num_mpz_t(), xi.get_mpz_t());
            if (Rational(r) > half_xi) r -= xi;
            if (r != 0) digit += Polynomial::term(Rational(r), m);
          }
          g += digit * Polynomial::variable(*v, power);
          e -= digit;
          Polynomial scaled;
          for (const auto& [m, coeff] : e.terms())
            scaled += Polynomial::term(coeff / Rational(xi), m);
          e = scaled;
          ++power;
        }
        if (!g.is_zero() && e.is_zero()) {
          g = g.primitive_part();
          if (divides_over_z(pp, g) && divides_over_z(qq, g)) return g * c;
        }
      }
    }
    xi = xi * 3 + 7;
  }
  return std::nullopt;
}

// Sound one-way coprimality test: specialize all variables but v at a random
// point; if the images are coprime the polynomials are coprime, because the
// image of the true gcd divides the gcd of the images.
bool certainly_coprime(const Polynomial& p, const Polynomial& q, Var v) {
  static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::uniform_int_distribution<long> draw(2, 9999);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::map<Var, Rational> at;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      Var w = static_cast<Var>(i);
      if (w == v) continue;
      if (p.uses(w) || q.uses(w)) at[w] = Rational(draw(rng));
    }
    auto image = [&](const Polynomial& poly, int expect_deg) -> std::optional<std::vector<Rational>> {
      std::vector<Rational> out(static_cast<std::size_t>(expect_deg) + 1, Rational(0));
      for (const auto& [m, c] : poly.terms()) {
        Rational val = c;
        for (const auto& [w, x] : at) val *= rational_pow(x, m[w]);
        out[m[v]] += val;
      }
      if (out.back() == 0) return std::nullopt;  // unlucky: leading term vanished
      return out;
    };
    auto fp = image(p, p.degree_in(v));
    auto fq = image(q, q.degree_in(v));
    if (!fp || !fq) continue;
    if (dense_gcd_degree(*fp, *fq) == 0) return true;
    return false;  // image shares a factor: almost surely a real common factor
  }
  return false;
}

// gcd of contents viewed in Q: for primitive-integer normalization we only
// need gcd over the polynomial part, so rational content collapses to 1.
Polynomial content_in(const Polynomial& p, Var v) {
  Polynomial c;
  for (const auto& [pow, coeff] : p.coefficients_in(v)) {
    c = c.is_zero() ? coeff : Polynomial::gcd(c, coeff);
    if (c.is_constant() && !c.is_zero()) return Polynomial(Rational(1));
  }
  return c;
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q.is_zero() ? q : q.primitive_part();
  if (q.is_zero()) return p.primitive_part();
  if (p.is_constant() || q.is_constant()) return Polynomial(Rational(1));
  auto v = main_variable(p, q);
  if (!v) return Polynomial(Rational(1));
  if (!p.uses(*v)) {
    // *v occurs only in q: gcd divides p, which is *v-free.
    return Polynomial::gcd(p, content_in(q, *v));
  }
  if (!q.uses(*v)) return Polynomial::gcd(q, content_in(p, *v));

  // Cheap sound filter: coprime specializations certify a coprime pair, and
  // that is the overwhelmingly common case in matrix composition.
  if (certainly_coprime(p, q, *v)) {
    Polynomial cp0 = content_in(p, *v), cq0 = content_in(q, *v);
    if (cp0.is_constant() || cq0.is_constant()) return Polynomial(Rational(1));
    return Polynomial::gcd(cp0, cq0);
  }

  // Heuristic single-point gcd. A success is a certified common divisor;
  // recursing on the cofactors until the coprimality filter fires makes the
  // overall answer the full gcd. A certified-constant result is accepted once
  // the evaluation filter concurs on fresh points; otherwise PRS decides.
  if (auto h = gcdheu(p.primitive_part(), q.primitive_part(), 0)) {
    Polynomial g = h->primitive_part();
    if (!g.is_constant())
      return (g * Polynomial::gcd(*divide_exact(p, g), *divide_exact(q, g))).primitive_part();
    if (certainly_coprime(p, q, *v)) return Polynomial(Rational(1));
  }

  Polynomial cp = content_in(p, *v), cq = content_in(q, *v);
  Polynomial pp = *divide_exact(p, cp), qq = *divide_exact(q, cq);
  Polynomial cont_gcd = Polynomial::gcd(cp, cq);

  Polynomial last = subresultant_last(pp.primitive_part(), qq.primitive_part(), *v);
  Polynomial part;
  if (last.degree_in(*v) == 0) {
    part = Polynomial(Rational(1));
  } else {
    part = *divide_exact(last, content_in(last, *v));
    part = part.primitive_part();
    // The PRS result is only guaranteed to be a gcd candidate; confirm.
    if (!divide_exact(pp, part) || !divide_exact(qq, part)) part = Polynomial(Rational(1));
  }
  return (cont_gcd * part).primitive_part();
}

Polynomial Polynomial::resultant(const Polynomial& p, const Polynomial& q, Var v) {
  int dp = p.degree_in(v), dq = q.degree_in(v);
  if (dp < 0 || dq < 0) return Polynomial();
  if (dp == 0) return p.pow(static_cast<unsigned>(dq));
  if (dq == 0) return q.pow(static_cast<unsigned>(dp));

  // Sylvester matrix, fraction-free Bareiss elimination.
  std::size_t n = static_cast<std::size_t>(dp + dq);
  std::vector<std::vector<Polynomial>> mat(n, std::vector<Polynomial>(n));
  auto pc = p.coefficients_in(v), qc = q.coefficients_in(v);
  auto coeff = [](std::map<unsigned, Polynomial>& m, int i) {
    auto it = m.find(static_cast<unsigned>(i));
    return it == m.end() ? Polynomial() : it->second;
  };
  for (int row = 0; row < dq; ++row)
    for (int j = 0; j <= dp; ++j) mat[row][row + j] = coeff(pc, dp - j);
  for (int row = 0; row < dp; ++row)
    for (int j = 0; j <= dq; ++j) mat[dq + row][row + j] = coeff(qc, dq - j);

  Polynomial prev(Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (mat[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && mat[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial();  // singular: resultant 0
      std::swap(mat[k], mat[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        auto d = divide_exact(num, prev);
        mat[i][j] = d ? *d : num;
      }
      mat[i][k] = Polynomial();
    }
    prev = mat[k][k];
  }
  Polynomial det = mat[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff < 0) {
        out << "-";
        coeff = -coeff;
      }
    } else {
      out << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool has_vars = !m.is_one();
    if (!has_vars || coeff != 1) {
      out << hypergamma::to_string(coeff);
      if (has_vars) out << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << kVarNames[i];
      if (m.e[i] > 1) out << "^" << m.e[i];
    }
  }
  return out.str();
}

}  // namespace hypergamma
