#pragma once

#include <stdexcept>
#include <string>

namespace amorph {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which defining property of a symmetric association scheme failed.
enum class Axiom {
  Range,     // label matrix malformed (shape or entry out of [0, d])
  Identity,  // A_0 = I
  Coverage,  // every class 1..d is used (sum of A_i = J with no empty class)
  Symmetry,  // A_i^T = A_i
  Closure,   // A_i A_j lies in the span of the A_h
};

const char* axiom_name(Axiom axiom);

class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, int row, int col, const std::string& detail);

  Axiom axiom() const { return axiom_; }
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  Axiom axiom_;
  int row_;
  int col_;
};

/// Located error in a scheme file (1-based line and column).
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& detail);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class LimitExceeded : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class IdempotencyViolation : public Error {
 public:
  IdempotencyViolation(int index, double residual, const std::string& what);
  int index() const { return index_; }
  double residual() const { return residual_; }

 private:
  int index_;
  double residual_;
};

class NegativeKrein : public Error {
 public:
  NegativeKrein(int i, int j, int h, double value);
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NotFusing : public Error {
 public:
  using Error::Error;
};

class WrongUniformity : public Error {
 public:
  using Error::Error;
};

class WrongClassCount : public Error {
 public:
  using Error::Error;
};

class FieldUnsupported : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class Unclassified : public Error {
 public:
  using Error::Error;
};

/// The exact and the eigenmatrix fusion oracles returned different answers.
class OracleDisagreement : public Error {
 public:
  using Error::Error;
};

/// A mathematical claim checked by the library did not hold.
class Falsification : public Error {
 public:
  Falsification(const std::string& claim, const std::string& detail);
  const std::string& claim() const { return claim_; }

 private:
  std::string claim_;
};

}  // namespace amorph
