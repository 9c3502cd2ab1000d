#pragma once

#include <stdexcept>
#include <string>

namespace qbaker {

/// Argument outside the mathematical domain of an operation (bad index,
/// mismatched qubit count, point outside the unit square).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested object would be too large for the dense verification path.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed input file. The message names the offending field.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qbaker
