#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <sstream>
#include <variant>

#include "cliffsim/circuit.hpp"
#include "cliffsim/clifford_element.hpp"
#include "cliffsim/dense_matrix.hpp"
#include "cliffsim/state_vector.hpp"
#include "oracles.hpp"

using namespace cliffsim;
using Coeff = std::complex<double>;

TEST_CASE("circuit parsing accepts the three instruction kinds") {
  const std::string text =
      "# a comment line\n"
      "qubits 2\n"
      "\n"
      "state 01\n"
      "apply 0.5 II + 0.5 IX + 0.5 ZI - 0.5 ZX\n"
      "rot 0.25 ZZ  # trailing comment\n";
  const CircuitProgram program = parse_circuit(text);
  CHECK(program.n == 2);
  REQUIRE(program.steps.size() == 3);
  CHECK(std::holds_alternative<ResetStep>(program.steps[0]));
  CHECK(std::holds_alternative<ApplyStep>(program.steps[1]));
  CHECK(std::holds_alternative<RotStep>(program.steps[2]));

  const auto& reset = std::get<ResetStep>(program.steps[0]);
  CHECK(reset.bits == std::vector<int>{0, 1});
  const auto& rot = std::get<RotStep>(program.steps[2]);
  CHECK(rot.theta == 0.25);
  CHECK(rot.axis == PauliString(2, 0, 0b11));
}

TEST_CASE("circuit parsing rejects malformed programs") {
  CHECK_THROWS_AS(parse_circuit(""), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("apply X\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 65\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits two\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nfrobnicate 1\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\napply X\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nrot abc XX\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nrot inf XX\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nrot 0.5 XA\n"),
                  std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nrot 0.5 X\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nstate 012\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nstate 02\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit("qubits 2\nrot 0.5 XX trailing\n"),
                  std::runtime_error);

  // The error names the offending line.
  try {
    parse_circuit("qubits 2\n\napply X\n");
    FAIL("expected parse failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("empty program leaves the all-zeros state") {
  const StateVector out = run_circuit(parse_circuit("qubits 3\n"));
  CHECK(out == basis_state({0, 0, 0}));
}

TEST_CASE("apply step multiplies by the element") {
  const StateVector out =
      run_circuit(parse_circuit("qubits 2\napply XX\n"));
  CHECK(out == basis_state({1, 1}));
}

TEST_CASE("state step resets mid-circuit") {
  const StateVector out =
      run_circuit(parse_circuit("qubits 2\napply XX\nstate 10\n"));
  CHECK(out == basis_state({1, 0}));
}

TEST_CASE("rot step matches the dense exponential") {
  const double theta = 0.785398163;
  const StateVector out =
      run_circuit(parse_circuit("qubits 1\nstate 0\nrot 0.785398163 Y\n"));

  // exp(i theta Y)|0> = cos(theta)|0> - sin(theta)|1>.
  CHECK(std::abs(out.amp(0) - Coeff{std::cos(theta), 0.0}) < 1e-12);
  CHECK(std::abs(out.amp(1) - Coeff{-std::sin(theta), 0.0}) < 1e-12);

  // Power series oracle agreement.
  CliffordElement h(1);
  h.add_term(PauliString(1, 1, 1), theta);
  const oracle::CMat series = oracle::series_exp_i(oracle::dense_of_element(h));
  Coeff a0 = series[0][0] * 1.0;
  Coeff a1 = series[1][0] * 1.0;
  CHECK(std::abs(out.amp(0) - a0) < 1e-10);
  CHECK(std::abs(out.amp(1) - a1) < 1e-10);
}

TEST_CASE("rot composes with applies") {
  const double theta = 0.3;
  std::stringstream text;
  text << "qubits 2\napply XI\nrot " << theta << " ZZ\n";
  const StateVector out = run_circuit(parse_circuit(text.str()));
  // XI|00> = |10>, then exp(i theta ZZ) scales by exp(-i theta) there.
  CHECK(std::abs(out.amp(2) -
                 Coeff{std::cos(theta), -std::sin(theta)}) < 1e-12);
}

TEST_CASE("rot uses the string identity on wide registers") {
  // Above the dense cap the closed form cos t + i sin t P is applied; both
  // routes agree with the hand-computed action on a basis state.
  const int n = 11;
  std::stringstream text;
  text << "qubits " << n << "\nrot 0.6 XIIIIIIIIII\n";
  const StateVector out = run_circuit(parse_circuit(text.str()));
  // P = X on qubit 10 flips the top bit: cos|0..0> + i sin |10..0>.
  CHECK(std::abs(out.amp(0) - Coeff{std::cos(0.6), 0.0}) < 1e-12);
  CHECK(std::abs(out.amp(std::size_t{1} << 10) - Coeff{0.0, std::sin(0.6)}) <
        1e-12);
  double rest = 0.0;
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (i != (std::size_t{1} << 10)) rest += std::abs(out.amp(i));
  }
  CHECK(rest == 0.0);

  // Same circuit truncated to the dense-capable width agrees with the
  // dense route.
  const StateVector small =
      run_circuit(parse_circuit("qubits 2\nrot 0.6 XI\n"));
  CliffordElement h(2);
  h.add_term(PauliString(2, 0b10, 0), 0.6);
  const StateVector dense =
      apply_unitary_dense(exp_i_hermitian(h), basis_state({0, 0}));
  for (std::size_t i = 0; i < small.size(); ++i)
    CHECK(std::abs(small.amp(i) - dense.amp(i)) < 1e-12);
}

TEST_CASE("bell circuit") {
  const StateVector bell = run_circuit(parse_circuit(
      "qubits 2\n"
      "apply 0.70710678118654757 XI + 0.70710678118654757 ZI\n"
      "apply 0.5 II + 0.5 IX + 0.5 ZI - 0.5 ZX\n"));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(bell.amp(0) - Coeff{s, 0.0}) < 1e-12);
  CHECK(std::abs(bell.amp(3) - Coeff{s, 0.0}) < 1e-12);
  CHECK(std::abs(bell.amp(1)) < 1e-12);
  CHECK(std::abs(bell.amp(2)) < 1e-12);
}

TEST_CASE("running a program beyond the state ceiling fails") {
  const CircuitProgram program = parse_circuit("qubits 30\n");
  CHECK_THROWS(run_circuit(program));
}
