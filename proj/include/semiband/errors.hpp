// Exception hierarchy shared by every module of the library.

#ifndef SEMIBAND_ERRORS_HPP
#define SEMIBAND_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace semiband {

  using Elem = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: bad file contents, empty tables, non-square tables.
  class InvalidInput : public Error {
   public:
    using Error::Error;
  };

  class IndexOutOfRange : public Error {
   public:
    using Error::Error;
  };

  class NonAssociative : public Error {
   public:
    NonAssociative(Elem a, Elem b, Elem c);
    Elem a, b, c;
  };

  // Carries the element (or elements) that refute a precondition.
  class WitnessedError : public Error {
   public:
    WitnessedError(std::string const& what, std::vector<Elem> witness);
    std::vector<Elem> const& witness() const noexcept {
      return witness_;
    }

   private:
    std::vector<Elem> witness_;
  };

  class NotAnIdeal : public WitnessedError {
   public:
    using WitnessedError::WitnessedError;
  };

  class NotClosed : public WitnessedError {
   public:
    using WitnessedError::WitnessedError;
  };

  class NotACongruence : public WitnessedError {
   public:
    using WitnessedError::WitnessedError;
  };

  class NotIdempotent : public WitnessedError {
   public:
    using WitnessedError::WitnessedError;
  };

  class NotIdempotentCovered : public WitnessedError {
   public:
    using WitnessedError::WitnessedError;
  };

  class NotRegular : public WitnessedError {
   public:
    using WitnessedError::WitnessedError;
  };

  class NotCompletelyRegular : public WitnessedError {
   public:
    using WitnessedError::WitnessedError;
  };

  class NoZeroElement : public Error {
   public:
    using Error::Error;
  };

  class NotAMonoid : public Error {
   public:
    using Error::Error;
  };

  class SearchBudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class DegreeTooLarge : public Error {
   public:
    using Error::Error;
  };

  class OrderTooLarge : public Error {
   public:
    using Error::Error;
  };

  // A construction failed one of its own cross-checks. Never expected on a
  // correct build; surfaced rather than folded into a verdict.
  class InternalError : public Error {
   public:
    using Error::Error;
  };

}  // namespace semiband

#endif  // SEMIBAND_ERRORS_HPP
