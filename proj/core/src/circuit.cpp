#include "cliffsim/circuit.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>

#include "cliffsim/dense_matrix.hpp"

namespace cliffsim {

namespace {

[[noreturn]] void fail(int line_number, const std::string& what) {
  throw std::runtime_error("circuit line " + std::to_string(line_number) + ": " + what);
}

PauliString parse_letters(int n, const std::string& letters, int line_number) {
  if (static_cast<int>(letters.size()) != n) fail(line_number, "letters length differs from qubit count");
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  for (int pos = 0; pos < n; ++pos) {
    const int qubit = n - 1 - pos;
    switch (letters[static_cast<std::size_t>(pos)]) {
      case 'I': break;
      case 'X': x |= std::uint64_t{1} << qubit; break;
      case 'Y': x |= std::uint64_t{1} << qubit; z |= std::uint64_t{1} << qubit; break;
      case 'Z': z |= std::uint64_t{1} << qubit; break;
      default: fail(line_number, "letters must be I X Y Z");
    }
  }
  return PauliString(n, x, z, 0);
}

std::vector<int> parse_bits(int n, const std::string& bits, int line_number) {
  if (static_cast<int>(bits.size()) != n) fail(line_number, "bit string length differs from qubit count");
  std::vector<int> out;
  out.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1') fail(line_number, "bits must be 0 or 1");
    out.push_back(c - '0');
  }
  return out;
}

// Strips comments and surrounding whitespace; empty result means skip.
std::string significant(const std::string& raw) {
  std::string line = raw;
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

CircuitProgram parse_circuit(std::istream& in) {
  CircuitProgram program;
  bool have_header = false;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string line = significant(raw);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string keyword;
    words >> keyword;
    if (!have_header) {
      if (keyword != "qubits") fail(line_number, "expected 'qubits n' first");
      int n = 0;
      if (!(words >> n) || n < 1 || n > kMaxQubits) fail(line_number, "invalid qubit count");
      std::string extra;
      if (words >> extra) fail(line_number, "trailing text after qubit count");
      program.n = n;
      have_header = true;
      continue;
    }
    if (keyword == "apply") {
      std::string rest;
      std::getline(words, rest);
      CliffordElement element = [&] {
        try {
          return parse_string(rest);
        } catch (const std::runtime_error& e) {
          fail(line_number, e.what());
        }
      }();
      if (element.num_qubits() != program.n)
        fail(line_number, "element width differs from qubit count");
      program.steps.push_back(ApplyStep{std::move(element)});
    } else if (keyword == "rot") {
      std::string theta_text;
      std::string letters;
      if (!(words >> theta_text >> letters)) fail(line_number, "expected 'rot <theta> <LETTERS>'");
      std::string extra;
      if (words >> extra) fail(line_number, "trailing text after rot");
      char* end = nullptr;
      const double theta = std::strtod(theta_text.c_str(), &end);
      if (end != theta_text.c_str() + theta_text.size() || !std::isfinite(theta))
        fail(line_number, "angle must be a finite real");
      program.steps.push_back(RotStep{theta, parse_letters(program.n, letters, line_number)});
    } else if (keyword == "state") {
      std::string bits;
      if (!(words >> bits)) fail(line_number, "expected 'state <bits>'");
      std::string extra;
      if (words >> extra) fail(line_number, "trailing text after state");
      program.steps.push_back(ResetStep{parse_bits(program.n, bits, line_number)});
    } else {
      fail(line_number, "unknown instruction '" + keyword + "'");
    }
  }
  if (!have_header) throw std::runtime_error("circuit: missing 'qubits n' header");
  return program;
}

CircuitProgram parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

namespace {

StateVector run_rot(const RotStep& step, const StateVector& psi) {
  if (psi.num_qubits() <= 10) {
    CliffordElement h(psi.num_qubits());
    h.add_term(step.axis, step.theta);
    return apply_unitary_dense(exp_i_hermitian(h), psi);
  }
  // P squares to the identity, so exp(i t P) = cos(t) + i sin(t) P.
  const StateVector rotated = apply_string(step.axis, psi);
  StateVector out(psi.num_qubits());
  const std::complex<double> c{std::cos(step.theta), 0.0};
  const std::complex<double> is{0.0, std::sin(step.theta)};
  for (std::size_t idx = 0; idx < out.size(); ++idx)
    out.amp(idx) = c * psi.amp(idx) + is * rotated.amp(idx);
  return out;
}

}  // namespace

StateVector run_circuit(const CircuitProgram& program) {
  if (program.n > max_state_qubits())
    throw std::invalid_argument("circuit: qubit count exceeds the state ceiling of " +
                                std::to_string(max_state_qubits()));
  StateVector psi = basis_state(std::vector<int>(static_cast<std::size_t>(program.n), 0));
  for (const CircuitStep& step : program.steps) {
    if (const auto* apply = std::get_if<ApplyStep>(&step)) {
      psi = apply_element(apply->element, psi);
    } else if (const auto* rot = std::get_if<RotStep>(&step)) {
      psi = run_rot(*rot, psi);
    } else {
      psi = basis_state(std::get<ResetStep>(step).bits);
    }
  }
  return psi;
}

}  // namespace cliffsim
