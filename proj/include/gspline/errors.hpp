#ifndef GSPLINE_ERRORS_HPP
#define GSPLINE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace gspline {

// Base of everything this library throws on purpose. Two branches:
//   InputError  - malformed files, expressions, schemas     (CLI exit code 2)
//   DomainError - well-formed input, mathematically refused (CLI exit code 1)
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class SchemaError : public InputError {
 public:
  using InputError::InputError;
};

class SelfLoopError : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateEdgeError : public InputError {
 public:
  using InputError::InputError;
};

class DisconnectedError : public InputError {
 public:
  using InputError::InputError;
};

class MixedRingError : public InputError {
 public:
  using InputError::InputError;
};

class LengthMismatchError : public InputError {
 public:
  using InputError::InputError;
};

// Congruence system has no solution; carries the indices (0-based, in
// insertion order) of a violating pair of conditions.
class IncompatibleSystemError : public DomainError {
 public:
  IncompatibleSystemError(const std::string& what, std::size_t first, std::size_t second)
      : DomainError(what), pair_(first, second) {}
  std::pair<std::size_t, std::size_t> violating_pair() const { return pair_; }

 private:
  std::pair<std::size_t, std::size_t> pair_;
};

class NotACycleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotOrderedError : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateFlowUpError : public DomainError {
 public:
  using DomainError::DomainError;
};

class PathLimitExceededError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SearchSpaceTooLargeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoFlowUpFoundError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InexactDivisionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A candidate member of a basis fails the spline condition; carries the
// offending member (0-based) and one violated edge.
class NonSplineError : public DomainError {
 public:
  NonSplineError(const std::string& what, std::size_t member, std::pair<int, int> edge)
      : DomainError(what), member_(member), edge_(edge) {}
  std::size_t member() const { return member_; }
  std::pair<int, int> edge() const { return edge_; }

 private:
  std::size_t member_;
  std::pair<int, int> edge_;
};

}  // namespace gspline

#endif
