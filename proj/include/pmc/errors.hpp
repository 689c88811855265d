#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pmc {

// Caller broke a documented precondition (width mismatch, empty set where a
// nonempty one is required, ...).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Input is outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Exact routine asked to run beyond its size cap.
class CapabilityError : public std::length_error {
public:
  using std::length_error::length_error;
};

// A proven invariant failed at runtime. Always an implementation bug.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class ParseError : public DomainError {
public:
  ParseError(int line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

// Raised when a routine that assumes P_t-freeness runs into an induced P_t.
class InducedPathError : public DomainError {
public:
  InducedPathError(std::vector<int> path, const std::string& what)
      : DomainError(what), path_(std::move(path)) {}
  const std::vector<int>& path() const { return path_; }

private:
  std::vector<int> path_;
};

class InfeasibleFamilyError : public DomainError {
public:
  using DomainError::DomainError;
};

class GenerationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pmc
