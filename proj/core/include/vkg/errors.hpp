// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vkg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Ill-formed value: dangling id, non-composable word, bad cell map.
class StructuralError : public Error {
public:
  using Error::Error;
};

// Endpoint mismatch when composing words or morphisms.
class CompositionError : public Error {
public:
  using Error::Error;
};

// Id not present in the container it was looked up in.
class LookupError : public Error {
public:
  using Error::Error;
};

// Caller violated an operation precondition.
class ContractError : public Error {
public:
  using Error::Error;
};

// A family of subcomplexes fails to cover; names the uncovered cells.
class CoverageError : public Error {
public:
  CoverageError(const std::string& msg, std::vector<std::string> missing_cells)
      : Error(msg), missing(std::move(missing_cells)) {}
  std::vector<std::string> missing;
};

// A path-component misses the base set; carries a representative vertex.
class HypothesisError : public Error {
public:
  HypothesisError(const std::string& msg, std::string rep)
      : Error(msg), representative(std::move(rep)) {}
  std::string representative;
};

// Deterministic work budget exhausted (hom enumeration, completion, ...).
class BudgetError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace vkg
