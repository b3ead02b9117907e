#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "cliffsim/clifford_element.hpp"
#include "cliffsim/state_vector.hpp"

namespace cliffsim {

/// Multiply the state by a general element.
struct ApplyStep {
  CliffordElement element;
};

/// Multiply the state by exp(i theta P) for a phase-0 string P.
struct RotStep {
  double theta;
  PauliString axis;
};

/// Reset to the basis state written in ket order.
struct ResetStep {
  std::vector<int> bits;
};

using CircuitStep = std::variant<ApplyStep, RotStep, ResetStep>;

struct CircuitProgram {
  int n = 1;
  std::vector<CircuitStep> steps;
};

/// Circuit text: first significant line "qubits n", then one instruction
/// per line: "apply <element-expr>", "rot <theta> <LETTERS>",
/// "state <bits>". '#' starts a comment; blank lines are skipped. All
/// letter/bit strings must have length n and theta must be finite. Throws
/// std::runtime_error naming the offending line.
CircuitProgram parse_circuit(std::istream& in);
CircuitProgram parse_circuit(const std::string& text);

/// Runs the program on the all-zeros basis state. A rot step applies the
/// dense exponential for n <= 10 and the closed form
/// cos(theta) psi + i sin(theta) (P psi) otherwise (P squares to identity).
StateVector run_circuit(const CircuitProgram& program);

}  // namespace cliffsim
