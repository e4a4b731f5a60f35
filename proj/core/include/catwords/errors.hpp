#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace catwords {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input sequence violates the Catalan growth rule. index() is the first
// offending position (0-based).
class NotCatalan : public Error {
 public:
  explicit NotCatalan(std::size_t index)
      : Error("not a Catalan word: violation at position " + std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class EmptyWord : public Error {
 public:
  EmptyWord() : Error("operation requires a nonempty word") {}
};

class MalformedPath : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Series errors.
class NonInvertibleLeadingCoefficient : public Error {
 public:
  using Error::Error;
};

class BadConstantTerm : public Error {
 public:
  using Error::Error;
};

class OrderExceeded : public Error {
 public:
  using Error::Error;
};

class NonExactMonomialDivision : public Error {
 public:
  using Error::Error;
};

// Family errors.
class NotAvailable : public Error {
 public:
  using Error::Error;
};

class NonContractive : public Error {
 public:
  using Error::Error;
};

// Bijection errors.
class SourceViolation : public Error {
 public:
  using Error::Error;
};

class MapIncomplete : public Error {
 public:
  using Error::Error;
};

}  // namespace catwords
