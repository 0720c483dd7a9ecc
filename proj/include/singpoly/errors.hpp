#ifndef SINGPOLY_ERRORS_HPP
#define SINGPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace singpoly {

// Base of every error raised by the library. The CLI maps subclasses onto
// process exit codes.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define SINGPOLY_DECLARE_ERROR(Name)                                          \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}      \
  }

// exact-arith
SINGPOLY_DECLARE_ERROR(DivisionByZero);
SINGPOLY_DECLARE_ERROR(ZeroPolynomial);
SINGPOLY_DECLARE_ERROR(ParseError);

// combinatorics
SINGPOLY_DECLARE_ERROR(IndexOutOfRange);
SINGPOLY_DECLARE_ERROR(DegreeMismatch);
SINGPOLY_DECLARE_ERROR(ZeroComposition);
SINGPOLY_DECLARE_ERROR(ZeroPartition);
SINGPOLY_DECLARE_ERROR(NodeOutsideDiagram);
SINGPOLY_DECLARE_ERROR(ParameterViolation);
SINGPOLY_DECLARE_ERROR(SearchBudgetExceeded);
SINGPOLY_DECLARE_ERROR(ShapeViolation);

// multipoly
SINGPOLY_DECLARE_ERROR(AmbientMismatch);
SINGPOLY_DECLARE_ERROR(FieldMismatch);
SINGPOLY_DECLARE_ERROR(SizeMismatch);
SINGPOLY_DECLARE_ERROR(InexactDivision);

// jack
SINGPOLY_DECLARE_ERROR(SpectralCollision);
SINGPOLY_DECLARE_ERROR(NotDecreasingAt);
SINGPOLY_DECLARE_ERROR(DegenerateFactor);
SINGPOLY_DECLARE_ERROR(PreconditionViolation);
SINGPOLY_DECLARE_ERROR(FormulaMismatch);
SINGPOLY_DECLARE_ERROR(AmbientTooSmall);
SINGPOLY_DECLARE_ERROR(SolveFailure);

// singular
SINGPOLY_DECLARE_ERROR(NotAnnihilated);
SINGPOLY_DECLARE_ERROR(GcdConditionViolated);
SINGPOLY_DECLARE_ERROR(ExpansionFailure);

#undef SINGPOLY_DECLARE_ERROR

// A coefficient has a pole at the requested κ value. Carries the offending
// denominator (as text) and, for polynomial specialization, the exponent.
class PoleError : public Error {
public:
  PoleError(const std::string& what, std::string factor, std::string exponent = {})
      : Error("PoleError: " + what), factor_(std::move(factor)),
        exponent_(std::move(exponent)) {}
  const std::string& factor() const noexcept { return factor_; }
  const std::string& exponent() const noexcept { return exponent_; }

private:
  std::string factor_;
  std::string exponent_;
};

// Raised by module construction when a basis element has a pole at κ0.
class PoleAtSingularValue : public Error {
public:
  explicit PoleAtSingularValue(const std::string& what)
      : Error("PoleAtSingularValue: " + what) {}
};

} // namespace singpoly

#endif
