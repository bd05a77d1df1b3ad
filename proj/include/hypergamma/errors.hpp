#pragma once

#include <stdexcept>
#include <string>

namespace hypergamma {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroDenominator : Error {
  explicit ZeroDenominator(const std::string& what = "zero denominator") : Error(what) {}
};

struct NotUnivariate : Error {
  explicit NotUnivariate(const std::string& what = "polynomial is not univariate") : Error(what) {}
};

struct NonLinearRemainder : Error {
  explicit NonLinearRemainder(const std::string& what = "irreducible factor of degree >= 2 over Q")
      : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

struct ZeroQ : Error {
  explicit ZeroQ(const std::string& what = "Q vanishes identically for this shift") : Error(what) {}
};

struct DegenerateElimination : Error {
  explicit DegenerateElimination(const std::string& what = "elimination system is singular")
      : Error(what) {}
};

struct PoleAtNonPositiveInteger : Error {
  explicit PoleAtNonPositiveInteger(const std::string& what = "Gamma pole at non-positive integer")
      : Error(what) {}
};

struct LowerParamPole : Error {
  explicit LowerParamPole(const std::string& what = "lower parameter hits a non-positive integer")
      : Error(what) {}
};

struct Divergent : Error {
  explicit Divergent(const std::string& what = "series diverges") : Error(what) {}
};

struct SeriesDiverges : Error {
  explicit SeriesDiverges(const std::string& what = "series diverges at every sample point")
      : Error(what) {}
};

struct NotPrime : Error {
  explicit NotPrime(const std::string& what = "modulus is not prime") : Error(what) {}
};

struct NotGosperSummable : Error {
  explicit NotGosperSummable(const std::string& what = "term has no hypergeometric antidifference")
      : Error(what) {}
};

struct NoRecurrenceFound : Error {
  explicit NoRecurrenceFound(const std::string& what = "no recurrence up to the requested order")
      : Error(what) {}
};

struct ClausenShapeMismatch : Error {
  explicit ClausenShapeMismatch(const std::string& what = "family does not satisfy c = a+b+1/2")
      : Error(what) {}
};

struct NonTruncatable : Error {
  explicit NonTruncatable(const std::string& what = "q-product cannot be truncated") : Error(what) {}
};

struct NonTerminatingOrder : Error {
  explicit NonTerminatingOrder(const std::string& what = "summand q-order does not grow")
      : Error(what) {}
};

}  // namespace hypergamma
