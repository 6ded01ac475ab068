#pragma once

#include <stdexcept>
#include <string>

namespace cbox {

/// Base class for every failure raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CBOX_DEFINE_ERROR(Name)           \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
    Name() : Error(#Name) {}              \
  }

// field
CBOX_DEFINE_ERROR(ZeroDenominator);
CBOX_DEFINE_ERROR(DivisionByZero);
CBOX_DEFINE_ERROR(PoleAtPoint);
CBOX_DEFINE_ERROR(NonPositiveValue);
CBOX_DEFINE_ERROR(EmptySampleSet);
CBOX_DEFINE_ERROR(SyntaxError);

// circuit
CBOX_DEFINE_ERROR(PortCountMismatch);
CBOX_DEFINE_ERROR(UnknownNode);
CBOX_DEFINE_ERROR(InvalidCircuit);

// dirichlet
CBOX_DEFINE_ERROR(MissingAssignment);
CBOX_DEFINE_ERROR(NodeNotInSupport);
CBOX_DEFINE_ERROR(BoundaryNotSubset);
CBOX_DEFINE_ERROR(LabelCollision);
CBOX_DEFINE_ERROR(NonConstantCoefficients);

// corel
CBOX_DEFINE_ERROR(SizeMismatch);
CBOX_DEFINE_ERROR(InvalidPartition);

// lagrel / blackbox
CBOX_DEFINE_ERROR(InterfaceMismatch);
CBOX_DEFINE_ERROR(NotLagrangian);
CBOX_DEFINE_ERROR(NotAGraph);

// netlist
CBOX_DEFINE_ERROR(NonPositiveImpedance);

#undef CBOX_DEFINE_ERROR

/// Netlist syntax error carrying the offending 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cbox
