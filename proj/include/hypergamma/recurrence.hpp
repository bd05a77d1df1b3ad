#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypergamma/ratfun.hpp"

namespace hypergamma {

// Telescoping certificate: B(t,n) = rho(t,n) * A(t,n).
struct Certificate {
  RationalFunction rho;
};

// sum_i coeffs[i] * F(t+1-i) = rhs, so coeffs[0] multiplies the highest
// shift. rhs is absent for homogeneous recurrences; when the boundary term
// -B(t,0) of a telescoped sum does not vanish it is carried there.
struct Recurrence {
  int order = 0;
  std::vector<Polynomial> coeffs;  // univariate in t (plus any symbolic params)
  std::optional<RationalFunction> rhs;
  std::optional<Certificate> certificate;
  std::vector<std::string> notes;
};

// Divides out the common polynomial factor and content, making the leading
// coefficient of coeffs[0] positive. Returns the rational-function multiplier
// that was applied (so certificates can be rescaled consistently).
RationalFunction normalize_recurrence_coeffs(std::vector<Polynomial>& coeffs);

}  // namespace hypergamma
