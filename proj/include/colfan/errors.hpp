#pragma once

#include <stdexcept>
#include <string>

namespace colfan {

/// Malformed or inconsistent input: unknown color, wrong length, bad schema.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that is well-formed but violates a named axiom required as a
/// precondition (e.g. an invalid fan handed to the quasiprojectivity check).
class AxiomViolation : public InputError {
 public:
  AxiomViolation(std::string axiom, const std::string& what)
      : InputError(axiom + ": " + what), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

}  // namespace colfan
