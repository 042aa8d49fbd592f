#pragma once

#include <stdexcept>
#include <string>

namespace sposet {

// Base class for every error raised by the library.  The CLI maps the
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// The input is not a poset with the structure the operation needs
// (cycle in the cover relation, no unique minimum, duplicate labels, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant.  Seeing one of these is a bug in this library.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// Raised by delta_glue.  what() is always kInvalidAssignmentMessage; detail()
// says which check failed.
class GluingSpecError : public Error {
 public:
  explicit GluingSpecError(std::string detail);
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
};

inline constexpr const char* kInvalidAssignmentMessage =
    "Assignment of atoms-atoms or facets-facets invalid.";

inline GluingSpecError::GluingSpecError(std::string detail)
    : Error(kInvalidAssignmentMessage), detail_(std::move(detail)) {}

}  // namespace sposet
