#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopoly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: weights, Cartan type strings, parameter values.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Inadmissible Cartan data (e.g. rank 1 for type B).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on otherwise well-formed input does not hold, such as a
/// non-dominant highest weight or a symbolic context where numeric k is needed.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because it would exceed a configured bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A denominator of the intertwiner recursion vanishes at the chosen k.
class SingularParameterError : public Error {
 public:
  SingularParameterError(std::size_t factor, const std::string& what)
      : Error(what), factor_(factor) {}

  /// 1-based position j of the vanishing factor d_j.
  std::size_t factor() const { return factor_; }

 private:
  std::size_t factor_;
};

}  // namespace hopoly
