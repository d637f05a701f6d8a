#pragma once

#include <stdexcept>
#include <string>

namespace ado {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar text or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (zero divisor, parameter
/// outside a family's declared range, degenerate polynomial).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A linear system or inverse was requested for a singular matrix.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, long rank) : Error(what), rank_(rank) {}
  long rank() const { return rank_; }

 private:
  long rank_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A bound rule was requested for an algebra outside its hypothesis.
class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

/// A construction (extension by identity, table representation) degenerated.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The translation part built from a representation is not invertible.
class NotEtaleError : public Error {
 public:
  NotEtaleError(const std::string& what, long rank) : Error(what), rank_(rank) {}
  long rank() const { return rank_; }

 private:
  long rank_;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

/// Bounds that contradict each other; signals a bug or a bad witness.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ado
