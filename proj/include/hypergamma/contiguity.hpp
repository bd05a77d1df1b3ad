#pragma once

#include <map>
#include <optional>

#include "hypergamma/recurrence.hpp"

namespace hypergamma {

inline constexpr int kMaxShiftComponent = 8;

// Integer displacement (k,l,m) of (a,b,c) per unit of t.
struct ShiftVector {
  int k = 0, l = 0, m = 0;

  bool operator==(const ShiftVector& s) const { return k == s.k && l == s.l && m == s.m; }
  bool is_zero() const { return k == 0 && l == 0 && m == 0; }
  ShiftVector operator+(const ShiftVector& s) const { return {k + s.k, l + s.l, m + s.m}; }
};

// Parameter triple as polynomials linear in t; bases may be rational numbers
// or the symbols a, b, c themselves (the generic family a+kt, b+lt, c+mt).
struct ParamVector {
  Polynomial a, b, c;

  // Rational base point beta0 = (a0,b0,c0) moving along gamma.
  static ParamVector family(const Rational& a0, const Rational& b0, const Rational& c0,
                            const ShiftVector& gamma);
  // Symbolic base: (a + k t, b + l t, c + m t).
  static ParamVector generic(const ShiftVector& gamma);

  std::map<Var, RationalFunction> bindings() const;
  ShiftVector t_slopes() const;  // requires integer slopes
};

// 2x2 matrix over Q(a,b,c,z) mapping (F, F') at beta to (F, F') at the
// shifted parameters. Row one holds (R, Q) of the contiguous decomposition.
struct TransferMatrix {
  RationalFunction m11, m12, m21, m22;

  static TransferMatrix identity();
  TransferMatrix operator*(const TransferMatrix& rhs) const;
  TransferMatrix inverse() const;
  RationalFunction determinant() const;
  TransferMatrix substitute(const std::map<Var, RationalFunction>& bindings) const;
  bool operator==(const TransferMatrix& rhs) const;
};

struct ContiguousDecomposition {
  ShiftVector shift;
  RationalFunction R, Q;
};

// Single-parameter step. The direct relations are F(a+1), F(b+1), F(c-1);
// the opposite directions are re-based inverses. Second rows come from
// differentiating row one and eliminating F'' through the hypergeometric ODE.
TransferMatrix elementary_matrix(Var param, int direction);

// Ordered product of elementary matrices (a-steps, then b, then c), each
// evaluated at the already-shifted parameters.
TransferMatrix shift_matrix(const ShiftVector& gamma);

ContiguousDecomposition decomposition(const ShiftVector& gamma);

// Order-2 recurrence p0 F(t+1) + p1 F(t) + p2 F(t-1) = 0 along the family,
// obtained by eliminating F' between consecutive transfer relations. When Q
// vanishes identically along the family the result degenerates to p2 = 0 with
// -p1/p0 the functional-equation ratio. z may be left symbolic.
Recurrence order2_recurrence(const ShiftVector& gamma, const ParamVector& family,
                             const std::optional<Rational>& z);

}  // namespace hypergamma
