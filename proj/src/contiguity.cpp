#include "hypergamma/contiguity.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hypergamma {

namespace {

RationalFunction sym(Var v) { return RationalFunction(Polynomial::variable(v)); }

void check_component(int x) {
  if (x < -kMaxShiftComponent || x > kMaxShiftComponent)
    throw std::invalid_argument("shift component out of the search bound");
}

}  // namespace

ParamVector ParamVector::family(const Rational& a0, const Rational& b0, const Rational& c0,
                                const ShiftVector& gamma) {
  return {Polynomial::linear(a0, Rational(gamma.k), Var::T),
          Polynomial::linear(b0, Rational(gamma.l), Var::T),
          Polynomial::linear(c0, Rational(gamma.m), Var::T)};
}

ParamVector ParamVector::generic(const ShiftVector& gamma) {
  return {Polynomial::variable(Var::A) + Polynomial::linear(Rational(0), Rational(gamma.k), Var::T),
          Polynomial::variable(Var::B) + Polynomial::linear(Rational(0), Rational(gamma.l), Var::T),
          Polynomial::variable(Var::C) + Polynomial::linear(Rational(0), Rational(gamma.m), Var::T)};
}

std::map<Var, RationalFunction> ParamVector::bindings() const {
  return {{Var::A, RationalFunction(a)}, {Var::B, RationalFunction(b)}, {Var::C, RationalFunction(c)}};
}

ShiftVector ParamVector::t_slopes() const {
  auto slope = [](const Polynomial& p) {
    Polynomial s = p.coefficient_of(Var::T, 1);
    if (!s.is_constant() || !is_integer(s.constant_value()) || p.degree_in(Var::T) > 1)
      throw std::invalid_argument("parameter form is not linear in t with integer slope");
    return static_cast<int>(s.constant_value().get_num().get_si());
  };
  return {slope(a), slope(b), slope(c)};
}

TransferMatrix TransferMatrix::identity() {
  return {RationalFunction(Rational(1)), RationalFunction(), RationalFunction(),
          RationalFunction(Rational(1))};
}

TransferMatrix TransferMatrix::operator*(const TransferMatrix& rhs) const {
  return {m11 * rhs.m11 + m12 * rhs.m21, m11 * rhs.m12 + m12 * rhs.m22,
          m21 * rhs.m11 + m22 * rhs.m21, m21 * rhs.m12 + m22 * rhs.m22};
}

RationalFunction TransferMatrix::determinant() const { return m11 * m22 - m12 * m21; }

TransferMatrix TransferMatrix::inverse() const {
  RationalFunction det = determinant();
  if (det.is_zero()) throw ZeroDenominator("singular transfer matrix");
  return {m22 / det, -m12 / det, -m21 / det, m11 / det};
}

TransferMatrix TransferMatrix::substitute(const std::map<Var, RationalFunction>& bindings) const {
  return {m11.substitute(bindings), m12.substitute(bindings), m21.substitute(bindings),
          m22.substitute(bindings)};
}

bool TransferMatrix::operator==(const TransferMatrix& rhs) const {
  return m11 == rhs.m11 && m12 == rhs.m12 && m21 == rhs.m21 && m22 == rhs.m22;
}

namespace {

// Completes (R, Q) to the full matrix: differentiate row one in z and replace
// F'' via z(1-z)F'' + (c-(a+b+1)z)F' - ab F = 0 at the unshifted parameters.
TransferMatrix complete_rows(const RationalFunction& R, const RationalFunction& Q) {
  RationalFunction a = sym(Var::A), b = sym(Var::B), c = sym(Var::C), z = sym(Var::Z);
  RationalFunction z1z = z * (RationalFunction(Rational(1)) - z);
  RationalFunction m21 = R.derivative(Var::Z) + Q * a * b / z1z;
  RationalFunction m22 =
      R + Q.derivative(Var::Z) - Q * (c - (a + b + RationalFunction(Rational(1))) * z) / z1z;
  return {R, Q, m21, m22};
}

TransferMatrix shift_var(const TransferMatrix& m, Var v, int delta) {
  RationalFunction moved(Polynomial::variable(v) + Polynomial(Rational(delta)));
  return m.substitute({{v, moved}});
}

const TransferMatrix& direct_matrix(Var param) {
  static const TransferMatrix a_up =
      complete_rows(RationalFunction(Rational(1)), sym(Var::Z) / sym(Var::A));
  static const TransferMatrix b_up =
      complete_rows(RationalFunction(Rational(1)), sym(Var::Z) / sym(Var::B));
  static const TransferMatrix c_down = complete_rows(
      RationalFunction(Rational(1)),
      sym(Var::Z) / (sym(Var::C) - RationalFunction(Rational(1))));
  switch (param) {
    case Var::A:
      return a_up;
    case Var::B:
      return b_up;
    default:
      return c_down;
  }
}

}  // namespace

TransferMatrix elementary_matrix(Var param, int direction) {
  if ((param != Var::A && param != Var::B && param != Var::C) ||
      (direction != 1 && direction != -1))
    throw std::invalid_argument("elementary_matrix expects a/b/c and direction +-1");
  // Direct relations move a and b up, c down.
  bool direct = (param == Var::C) ? (direction == -1) : (direction == 1);
  if (direct) return direct_matrix(param);
  // Re-based inverse: the step from beta lands where the direct relation
  // starts, so evaluate the direct matrix there and invert.
  return shift_var(direct_matrix(param), param, direction).inverse();
}

namespace {

TransferMatrix compute_shift_matrix(const ShiftVector& gamma);

struct ShiftLess {
  bool operator()(const ShiftVector& x, const ShiftVector& y) const {
    return std::tie(x.k, x.l, x.m) < std::tie(y.k, y.l, y.m);
  }
};

}  // namespace

TransferMatrix shift_matrix(const ShiftVector& gamma) {
  check_component(gamma.k);
  check_component(gamma.l);
  check_component(gamma.m);
  static std::mutex memo_mutex;
  static std::map<ShiftVector, TransferMatrix, ShiftLess> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(gamma);
    if (it != memo.end()) return it->second;
  }
  TransferMatrix result = compute_shift_matrix(gamma);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(gamma, std::move(result)).first->second;
}

namespace {

TransferMatrix compute_shift_matrix(const ShiftVector& gamma) {
  TransferMatrix total = TransferMatrix::identity();
  ShiftVector at{0, 0, 0};
  auto apply_steps = [&](Var param, int count) {
    int dir = count >= 0 ? 1 : -1;
    TransferMatrix step = elementary_matrix(param, dir);
    for (int i = 0; i < std::abs(count); ++i) {
      TransferMatrix here = step;
      if (at.k != 0) here = shift_var(here, Var::A, at.k);
      if (at.l != 0) here = shift_var(here, Var::B, at.l);
      if (at.m != 0) here = shift_var(here, Var::C, at.m);
      total = here * total;
      (param == Var::A ? at.k : param == Var::B ? at.l : at.m) += dir;
    }
  };
  apply_steps(Var::A, gamma.k);
  apply_steps(Var::B, gamma.l);
  apply_steps(Var::C, gamma.m);
  return total;
}

}  // namespace

ContiguousDecomposition decomposition(const ShiftVector& gamma) {
  TransferMatrix m = shift_matrix(gamma);
  return {gamma, m.m11, m.m12};
}

RationalFunction normalize_recurrence_coeffs(std::vector<Polynomial>& coeffs) {
  Polynomial g;
  for (const auto& p : coeffs)
    if (!p.is_zero()) g = g.is_zero() ? p : Polynomial::gcd(g, p);
  if (g.is_zero()) return RationalFunction(Rational(1));
  std::vector<Polynomial> reduced;
  for (const auto& p : coeffs)
    reduced.push_back(p.is_zero() ? p : *Polynomial::divide_exact(p, g));
  Rational content(0);
  const Polynomial* lead = nullptr;
  for (const auto& p : reduced)
    if (!p.is_zero()) {
      if (!lead) lead = &p;
      content = rational_gcd(content, p.content());
    }
  if (lead && lead->leading_coefficient() < 0) content = -content;
  for (auto& p : reduced) p = p * (Rational(1) / content);
  coeffs = std::move(reduced);
  // coeffs_new = coeffs_old / (g * content)
  return RationalFunction(Rational(1)) / RationalFunction(g * content);
}

Recurrence order2_recurrence(const ShiftVector& gamma, const ParamVector& family,
                             const std::optional<Rational>& z) {
  ShiftVector slopes = family.t_slopes();
  if (!(slopes == gamma)) throw std::invalid_argument("family t-coefficients do not match gamma");

  if (gamma.is_zero()) {
    Recurrence triv;
    triv.order = 1;
    triv.coeffs = {Polynomial(Rational(1)), Polynomial(Rational(-1))};
    return triv;
  }

  TransferMatrix m = shift_matrix(gamma);
  auto bindings = family.bindings();
  if (z) bindings[Var::Z] = RationalFunction(*z);
  TransferMatrix mt = m.substitute(bindings);

  Recurrence rec;
  if (mt.m12.is_zero()) {
    // Admissible specialization: F(t+1) = R(t) F(t) exactly.
    rec.order = 1;
    rec.coeffs = {mt.m11.den(), -mt.m11.num(), Polynomial()};
    normalize_recurrence_coeffs(rec.coeffs);
    rec.notes.push_back("Q vanishes along the family; order collapses to 1");
    return rec;
  }

  std::map<Var, RationalFunction> back{{Var::T, RationalFunction(
      Polynomial::linear(Rational(-1), Rational(1), Var::T))}};
  RationalFunction Q = mt.m12, R = mt.m11;
  RationalFunction Qm = mt.m12.substitute(back), Rm = mt.m11.substitute(back),
                   Sm = mt.m21.substitute(back), Tm = mt.m22.substitute(back);
  if (Qm.is_zero()) throw DegenerateElimination();

  RationalFunction r1 = -(R + Q * Tm / Qm);
  RationalFunction r2 = Q * (Tm * Rm - Sm * Qm) / Qm;

  // Clear denominators: multiply (1, r1, r2) by lcm of the denominators.
  Polynomial d1 = r1.den(), d2 = r2.den();
  Polynomial g = Polynomial::gcd(d1, d2);
  Polynomial lcm = *Polynomial::divide_exact(d1 * d2, g);
  rec.order = 2;
  rec.coeffs = {lcm, r1.num() * *Polynomial::divide_exact(lcm, d1),
                r2.num() * *Polynomial::divide_exact(lcm, d2)};
  normalize_recurrence_coeffs(rec.coeffs);
  return rec;
}

}  // namespace hypergamma
