// Command-line front end: generator relation checks, Pauli decomposition of
// matrix files, circuit simulation, rotor demos, and CAR verification.
// Exit codes: 0 = success / all checks pass, 1 = verification failure,
// 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cliffsim/circuit.hpp"
#include "cliffsim/dense_matrix.hpp"
#include "cliffsim/fermion.hpp"
#include "cliffsim/number_text.hpp"
#include "cliffsim/rotor.hpp"
#include "cliffsim/state_vector.hpp"

namespace {

using namespace cliffsim;

constexpr int kDenseRelationCap = 6;  // naive dense products; keeps runtime in seconds

int run_relations(int n, const std::string& mode) {
  const bool dense = mode == "dense";
  if (n < 1 || n > (dense ? kDenseRelationCap : kMaxQubits)) {
    std::cerr << "relations: --n must be in [1, " << (dense ? kDenseRelationCap : kMaxQubits)
              << "] for mode " << mode << "\n";
    return 2;
  }
  double violation = 0.0;
  const int count = 2 * n;
  if (dense) {
    std::vector<DenseMatrix> g;
    for (int j = 0; j < count; ++j) g.push_back(to_matrix(generator(n, j)));
    const DenseMatrix id = DenseMatrix::identity(std::size_t{1} << n);
    for (int i = 0; i < count; ++i) {
      violation = std::max(violation, max_abs_diff(g[i] * g[i], id));
      for (int j = i + 1; j < count; ++j)
        violation = std::max(violation, max_abs(g[i] * g[j] + g[j] * g[i]));
    }
  } else {
    const CliffordElement id = CliffordElement::identity(n);
    for (int i = 0; i < count; ++i) {
      const PauliString gi = generator(n, i);
      violation = std::max(violation,
                           (CliffordElement::from_string(mul(gi, gi)) - id).max_abs_coeff());
      for (int j = i + 1; j < count; ++j)
        violation = std::max(violation, anticommutator(gi, generator(n, j)).max_abs_coeff());
    }
  }
  const bool pass = violation <= (dense ? 1e-12 : 0.0);
  std::cout << "mode: " << (dense ? "dense" : "symbolic") << "\n"
            << "generators: " << count << "\n"
            << "pairs: " << count * (count - 1) / 2 << "\n"
            << "max violation: " << format_real(violation) << "\n"
            << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

int run_decompose(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "decompose: cannot open '" << path << "'\n";
    return 2;
  }
  const DenseMatrix m = read_matrix(in);
  const CliffordElement element = prune(decompose(m), 1e-12);
  std::cout << format_string(element, /*always_show_coeff=*/true) << "\n";
  return 0;
}

int run_simulate(const std::string& path, const std::string& out_path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "simulate: cannot open '" << path << "'\n";
    return 2;
  }
  const StateVector psi = run_circuit(parse_circuit(in));
  if (out_path.empty()) {
    write_state(std::cout, psi);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "simulate: cannot open '" << out_path << "' for writing\n";
    return 2;
  }
  write_state(out, psi);
  return 0;
}

int run_rotor(double angle, const std::vector<int>& plane, const std::vector<double>& vec) {
  for (int index : plane)
    if (index < 1 || index > 3) {
      std::cerr << "rotor: plane indices must be in {1, 2, 3}\n";
      return 2;
    }
  if (plane[0] == plane[1]) {
    std::cerr << "rotor: plane indices must differ\n";
    return 2;
  }
  // 3D algebra with all generator squares -1, so the rotor
  // cos(t/2) + sin(t/2) e_i e_j turns e_i toward e_j by t.
  const Signature sig(3, 0);
  const Rotor r = Rotor::plane_rotation(sig, plane[0] - 1, plane[1] - 1, angle);
  const std::vector<double> image = rotate(r, vec);
  std::cout << "rotated:";
  for (double c : image) std::cout << ' ' << format_real(c);
  std::cout << "\nmatrix:\n";
  for (const auto& row : rotation_matrix(r)) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) std::cout << ' ';
      std::cout << format_real(row[c]);
    }
    std::cout << '\n';
  }
  return 0;
}

int run_fermion(int n) {
  const CarReport report = verify_car(n);  // throws (exit 2) beyond the cap
  std::cout << "modes: " << n << "\n";
  const auto print_family = [&](const std::string& label, bool creation_left,
                                bool creation_right, bool delta) {
    std::cout << label << ":\n";
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const CliffordElement left = creation_left ? creation(n, i) : annihilation(n, i);
        const CliffordElement right = creation_right ? creation(n, j) : annihilation(n, j);
        CliffordElement acomm = anticommutator(left, right);
        if (delta && i == j) acomm = acomm - CliffordElement::identity(n);
        const double violation = acomm.max_abs_coeff();
        std::cout << "  (" << i << ',' << j << ") " << (violation == 0.0 ? "PASS" : "FAIL")
                  << "\n";
      }
    }
  };
  print_family("{a_i, a_j} = 0", false, false, false);
  print_family("{a+_i, a+_j} = 0", true, true, false);
  print_family("{a+_i, a_j} = delta_ij", true, false, true);
  std::cout << "max violation: " << format_real(report.max_violation()) << "\n"
            << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-string Clifford algebra toolkit"};
  app.require_subcommand(1);

  int relations_n = 1;
  std::string relations_mode = "symbolic";
  CLI::App* relations = app.add_subcommand("relations", "Verify generator relations");
  relations->add_option("--n", relations_n, "Qubit count")->required();
  relations->add_option("--mode", relations_mode, "symbolic or dense")
      ->check(CLI::IsMember({"symbolic", "dense"}));

  std::string decompose_path;
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Pauli expansion of a matrix file");
  decompose_cmd->add_option("matrix-file", decompose_path, "Matrix file path")->required();

  std::string circuit_path;
  std::string out_path;
  CLI::App* simulate = app.add_subcommand("simulate", "Run a circuit file");
  simulate->add_option("circuit-file", circuit_path, "Circuit file path")->required();
  simulate->add_option("--out", out_path, "Write the final state here instead of stdout");

  double angle = 0.0;
  std::vector<int> plane;
  std::vector<double> vec;
  CLI::App* rotor = app.add_subcommand("rotor", "Rotate a 3D vector with a rotor");
  rotor->add_option("--angle", angle, "Rotation angle in radians")->required();
  rotor->add_option("--plane", plane, "Generator indices i j (1-based)")
      ->expected(2)
      ->required();
  rotor->add_option("--vector", vec, "Vector coefficients x y z")->expected(3)->required();

  int fermion_n = 1;
  CLI::App* fermion = app.add_subcommand("fermion", "Verify canonical anticommutation relations");
  fermion->add_option("--n", fermion_n, "Mode count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (relations->parsed()) return run_relations(relations_n, relations_mode);
    if (decompose_cmd->parsed()) return run_decompose(decompose_path);
    if (simulate->parsed()) return run_simulate(circuit_path, out_path);
    if (rotor->parsed()) return run_rotor(angle, plane, vec);
    if (fermion->parsed()) return run_fermion(fermion_n);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
