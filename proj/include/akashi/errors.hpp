// Error taxonomy. Three families, matching the CLI exit-code contract:
// precision failures (exit 2), certificate/hypothesis failures (exit 3),
// and plain misuse (exit 1).
#ifndef AKASHI_ERRORS_HPP
#define AKASHI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace akashi {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// The computation cannot be resolved at the working precision (p^N, T^D).
struct PrecisionError : Error {
  using Error::Error;
};

// A hypothesis or certificate required by the underlying theory failed.
struct CertificateError : Error {
  using Error::Error;
};

// Bad arguments: mixed moduli, invalid module data, unknown reduction type.
struct DomainError : Error {
  using Error::Error;
};

struct PrecisionMismatch : DomainError {
  explicit PrecisionMismatch(const std::string& msg = "operands carry different (p, N) or T-degree")
      : DomainError(msg) {}
};

struct NotAUnit : DomainError {
  explicit NotAUnit(const std::string& msg = "element is not a unit") : DomainError(msg) {}
};

struct IndistinguishableFromZero : PrecisionError {
  explicit IndistinguishableFromZero(const std::string& msg = "all coefficients vanish mod p^N")
      : PrecisionError(msg) {}
};

struct TruncationTooSmall : PrecisionError {
  explicit TruncationTooSmall(const std::string& msg = "no unit coefficient below degree D; lambda >= D cannot be certified")
      : PrecisionError(msg) {}
};

struct LeadingTermBelowPrecision : PrecisionError {
  explicit LeadingTermBelowPrecision(const std::string& msg = "leading term cannot be separated from zero at this precision")
      : PrecisionError(msg) {}
};

struct PrecisionInsufficient : PrecisionError {
  explicit PrecisionInsufficient(const std::string& msg = "cannot resolve a factor at the working precision")
      : PrecisionError(msg) {}
};

struct TruncationNotStable : PrecisionError {
  explicit TruncationNotStable(const std::string& msg = "result changes between truncation levels")
      : PrecisionError(msg) {}
};

struct NonIntegralAkashi : PrecisionError {
  explicit NonIntegralAkashi(const std::string& msg = "denominator factors do not divide numerator factors at precision")
      : PrecisionError(msg) {}
};

struct ValuationAtPrecisionCap : PrecisionError {
  explicit ValuationAtPrecisionCap(const std::string& msg = "valuation is >= N; indistinguishable from zero")
      : PrecisionError(msg) {}
};

struct NotTorsionAtPrecision : CertificateError {
  explicit NotTorsionAtPrecision(const std::string& msg = "module is not certified torsion at this precision")
      : CertificateError(msg) {}
};

struct NotExact : CertificateError {
  explicit NotExact(const std::string& msg = "supplied maps do not form a short exact sequence at truncation")
      : CertificateError(msg) {}
};

struct HypothesisNotAssumed : CertificateError {
  explicit HypothesisNotAssumed(const std::string& msg) : CertificateError(msg) {}
};

struct BadReduction : DomainError {
  explicit BadReduction(const std::string& msg = "curve has bad reduction at this prime") : DomainError(msg) {}
};

struct PrimeTooLarge : DomainError {
  explicit PrimeTooLarge(const std::string& msg = "prime exceeds the enumeration bound") : DomainError(msg) {}
};

struct PlaceDividesP : DomainError {
  explicit PlaceDividesP(const std::string& msg = "place divides p; correction series is only defined for v not dividing p")
      : DomainError(msg) {}
};

struct SizeBound : DomainError {
  explicit SizeBound(const std::string& msg = "instance exceeds the oracle enumeration bound") : DomainError(msg) {}
};

}  // namespace akashi

#endif
