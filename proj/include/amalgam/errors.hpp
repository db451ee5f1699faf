#ifndef AMALGAM_ERRORS_HPP
#define AMALGAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace amalgam {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid construction parameters or malformed external specs (CLI exit 2).
struct SpecError : Error {
  using Error::Error;
};

// The remaining errors are math-domain failures (CLI exit 3).

// Tabulated weight queried outside its grid.
struct OutOfDomainError : Error {
  using Error::Error;
};

// Shift or endpoint not representable on the sample grid.
struct AlignmentError : Error {
  using Error::Error;
};

// An operation would push non-negligible mass past the truncation window.
struct WindowOverflowError : Error {
  using Error::Error;
};

// A check was invoked with inputs that violate its hypotheses.
struct HypothesisError : Error {
  using Error::Error;
};

// A symbolic decision was requested for weights without closed form.
struct UndecidableError : Error {
  using Error::Error;
};

}  // namespace amalgam

#endif
