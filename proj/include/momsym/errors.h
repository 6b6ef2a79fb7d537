#ifndef MOMSYM_ERRORS_H_
#define MOMSYM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace momsym {

// Shape mismatches, out-of-range parameters, violated preconditions.
class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// Non-finite values, solver non-convergence.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Valid request outside the supported domain (e.g. multivariate block reinterpretation).
class UnsupportedError : public ArgumentError {
 public:
  explicit UnsupportedError(const std::string& what) : ArgumentError(what) {}
};

// Malformed input files or JSON documents.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace momsym

#endif  // MOMSYM_ERRORS_H_
