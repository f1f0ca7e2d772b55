#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatdec {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
  DivisionByZeroError() : Error("division by zero") {}
};

struct DimensionError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  SingularMatrixError() : Error("matrix is singular") {}
};

struct NotEtaHermitianError : Error {
  using Error::Error;
};

// An input file violates a declared symmetry (e.g. A is not eta-Hermitian).
struct SymmetryError : Error {
  using Error::Error;
};

struct InvalidFreeParamsError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line(line), column(column) {}
  std::size_t line = 0;    // 1-based; 0 when unknown
  std::size_t column = 0;  // 1-based position within the parsed text
};

// A postcondition that holds by construction failed; always a bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace quatdec
