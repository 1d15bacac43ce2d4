#include "amorph/errors.hpp"

#include <sstream>

namespace amorph {

const char* axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::Range:
      return "range";
    case Axiom::Identity:
      return "identity";
    case Axiom::Coverage:
      return "coverage";
    case Axiom::Symmetry:
      return "symmetry";
    case Axiom::Closure:
      return "closure";
  }
  return "unknown";
}

namespace {

std::string located(Axiom axiom, int row, int col, const std::string& detail) {
  std::ostringstream os;
  os << "axiom violation (" << axiom_name(axiom) << ") at (" << row << ", " << col << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, int row, int col, const std::string& detail)
    : Error(located(axiom, row, col, detail)), axiom_(axiom), row_(row), col_(col) {}

ParseError::ParseError(int line, int column, const std::string& detail)
    : Error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + detail),
      line_(line),
      column_(column) {}

IdempotencyViolation::IdempotencyViolation(int index, double residual, const std::string& what)
    : Error("idempotent E_" + std::to_string(index) + " violates " + what + " (residual " +
            std::to_string(residual) + ")"),
      index_(index),
      residual_(residual) {}

NegativeKrein::NegativeKrein(int i, int j, int h, double value)
    : Error("negative Krein parameter q[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
            std::to_string(h) + "] = " + std::to_string(value)) {}

Falsification::Falsification(const std::string& claim, const std::string& detail)
    : Error("falsified " + claim + ": " + detail), claim_(claim) {}

}  // namespace amorph
