#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hochcat {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct MixedFields : Error {
  explicit MixedFields(const std::string& msg = "operands live over different fields") : Error(msg) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

struct NotPrime : Error {
  explicit NotPrime(std::uint64_t p) : Error("modulus " + std::to_string(p) + " is not prime") {}
};

struct BadScalar : Error {
  explicit BadScalar(const std::string& text) : Error("cannot parse scalar \"" + text + "\"") {}
};

// Tensor-word bookkeeping errors.
struct UnknownAtom : Error {
  explicit UnknownAtom(const std::string& id) : Error("atom \"" + id + "\" not declared in instance") {}
};

struct EmptyWord : Error {
  EmptyWord() : Error("the empty tensor power is a notational device, not an object") {}
};

struct WordMismatch : Error {
  explicit WordMismatch(const std::string& msg) : Error(msg) {}
};

struct IncompatibleWords : Error {
  explicit IncompatibleWords(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct DegreeOutOfRange : Error {
  explicit DegreeOutOfRange(const std::string& msg) : Error(msg) {}
};

struct NotSymmetricInstance : Error {
  NotSymmetricInstance() : Error("instance carries no symmetry") {}
};

// Ring-object construction failures carry a witness.
struct NotAssociative : Error {
  int i, j, k;
  NotAssociative(int i_, int j_, int k_)
      : Error("multiplication table is not associative at basis triple (" + std::to_string(i_) + ", " +
              std::to_string(j_) + ", " + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

struct UnitFails : Error {
  int basis_index;
  explicit UnitFails(int idx)
      : Error("unit axiom fails on basis element " + std::to_string(idx)), basis_index(idx) {}
};

struct ActionAxiomFails : Error {
  std::string diagram;
  explicit ActionAxiomFails(const std::string& which)
      : Error("bimodule axiom fails: " + which), diagram(which) {}
};

struct NotACocycle : Error {
  explicit NotACocycle(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  int line, column;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_), column(col_) {}
};

struct DimMismatch : Error {
  explicit DimMismatch(const std::string& msg) : Error(msg) {}
};

struct DegreeBudgetExceeded : Error {
  explicit DegreeBudgetExceeded(const std::string& msg) : Error(msg) {}
};

}  // namespace hochcat
