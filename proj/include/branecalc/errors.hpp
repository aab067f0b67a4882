#pragma once

#include <stdexcept>
#include <string>

namespace branecalc {

// Base class for all domain errors raised by the library. The CLI maps these
// to exit code 2; anything else escaping is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic between ring elements of different cyclic orders.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

// A boundary-state label violates the parity selection rule, detected either
// up front (label check) or when odd shift slots survive to projection.
class ParityError : public Error {
 public:
  using Error::Error;
};

// Charge extraction requested on a model without a relation lattice.
class MissingRelationsError : public Error {
 public:
  using Error::Error;
};

// A Cardy label, fusion label, quiver vertex or similar index is out of range.
class LabelRangeError : public Error {
 public:
  using Error::Error;
};

// A geometric or arithmetic precondition failed (CY condition, zero rank,
// singular matrix, non-invertible data).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

// Model-definition file could not be parsed; message carries line/field info.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace branecalc
