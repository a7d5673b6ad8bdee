#ifndef STAIRCASE_ERRORS_HPP
#define STAIRCASE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace staircase {

// Base class for all domain errors raised by the library. Parse and schema
// errors derive from it as well but carry extra location info; the CLI maps
// them to a different exit code.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DegenerateEdge : public Error {
 public:
  using Error::Error;
};

class EmptyGeneratorSet : public Error {
 public:
  using Error::Error;
};

class NotInPositiveQuadrant : public Error {
 public:
  using Error::Error;
};

// Fixed-width integer arithmetic would have wrapped; the operation is
// refused instead. No silent wrap anywhere in the pipeline.
class OverflowDetected : public Error {
 public:
  using Error::Error;
};

class NotIntegrallyClosed : public Error {
 public:
  using Error::Error;
};

class EmptyTruncation : public Error {
 public:
  using Error::Error;
};

class NonAdmissibleModule : public Error {
 public:
  using Error::Error;
};

class ViewportTooLarge : public Error {
 public:
  using Error::Error;
};

class PropertyViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& what, const std::string& json_pointer)
      : Error(what + " (at " + (json_pointer.empty() ? "/" : json_pointer) + ")"),
        pointer_(json_pointer) {}

  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace staircase

#endif  // STAIRCASE_ERRORS_HPP
