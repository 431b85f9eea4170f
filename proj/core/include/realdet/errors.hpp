// Error taxonomy shared by the whole library.  Every failure mode that callers
// are expected to handle programmatically gets its own exception type; the CLI
// maps these to distinct exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace realdet {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input data failed to parse (malformed JSON, bad rational literal, shape
// mismatch in a matrix file, ...).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// The input pencil violates a genericity assumption that the solver cannot
// repair by redrawing random data: identically-zero determinant, or a
// singular incidence system detected by the smoothness gate.
class GenericityError : public Error {
 public:
  explicit GenericityError(const std::string& what) : Error(what) {}
};

// A randomized step (change of variables, separating form, slicing
// hyperplane, ...) failed to reach the generic situation within the
// configured retry budget.
class RetryExhausted : public Error {
 public:
  explicit RetryExhausted(const std::string& what) : Error(what) {}
};

// A numeric refinement loop (root isolation box shrinking) exceeded its
// iteration budget.
class RefinementError : public Error {
 public:
  explicit RefinementError(const std::string& what) : Error(what) {}
};

// Violated mathematical precondition detected at run time (non-squarefree
// input to Sturm isolation, positive-dimensional ideal where a finite one is
// required, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace realdet
