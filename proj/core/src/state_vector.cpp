#include "cliffsim/state_vector.hpp"

#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string>

#include "cliffsim/number_text.hpp"

namespace cliffsim {

int max_state_qubits() {
  const char* env = std::getenv("CLIFFSIM_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return 20;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0') return 20;
  if (v < 1) return 1;
  if (v > kMaxStateQubits) return kMaxStateQubits;
  return static_cast<int>(v);
}

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > max_state_qubits())
    throw std::invalid_argument("state: qubit count out of range [1, " +
                                std::to_string(max_state_qubits()) + "]");
  amps_.assign(std::size_t{1} << n, std::complex<double>{0.0});
}

StateVector basis_state(const std::vector<int>& bits) {
  const int n = static_cast<int>(bits.size());
  StateVector psi(n);
  std::size_t index = 0;
  for (int k = 0; k < n; ++k) {
    const int b = bits[static_cast<std::size_t>(k)];
    if (b != 0 && b != 1) throw std::invalid_argument("basis_state: bits must be 0 or 1");
    index = (index << 1) | static_cast<std::size_t>(b);
  }
  psi.amp(index) = 1.0;
  return psi;
}

StateVector apply_string(const PauliString& p, const StateVector& psi) {
  if (p.n != psi.num_qubits()) throw std::invalid_argument("apply_string: sizes differ");
  StateVector out(p.n);
  const std::size_t size = psi.size();
  const std::size_t x = p.x_mask;
  const std::uint64_t z = p.z_mask;
  const int base = (p.phase + std::popcount(p.x_mask & p.z_mask)) & 3;
  for (std::size_t idx = 0; idx < size; ++idx) {
    const int ph = (base + 2 * (std::popcount(idx & z) & 1)) & 3;
    out.amp(idx ^ x) = mul_ipow(psi.amp(idx), ph);
  }
  return out;
}

StateVector apply_element(const CliffordElement& a, const StateVector& psi) {
  if (a.num_qubits() != psi.num_qubits())
    throw std::invalid_argument("apply_element: sizes differ");
  StateVector out(psi.num_qubits());
  const std::size_t size = psi.size();
  for (const auto& [key, c] : a.terms()) {
    const std::size_t x = key.x;
    const std::uint64_t z = key.z;
    const int base = std::popcount(key.x & key.z) & 3;
    for (std::size_t idx = 0; idx < size; ++idx) {
      const int ph = (base + 2 * (std::popcount(idx & z) & 1)) & 3;
      out.amp(idx ^ x) += c * mul_ipow(psi.amp(idx), ph);
    }
  }
  return out;
}

StateVector apply_unitary_dense(const DenseMatrix& u, const StateVector& psi) {
  if (u.dim() != psi.size()) throw std::invalid_argument("apply_unitary_dense: dims differ");
  StateVector out(psi.num_qubits());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    std::complex<double> acc = 0.0;
    for (std::size_t c = 0; c < u.dim(); ++c) acc += u.at(r, c) * psi.amp(c);
    out.amp(r) = acc;
  }
  return out;
}

std::complex<double> inner(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw std::invalid_argument("inner: sizes differ");
  std::complex<double> acc = 0.0;
  for (std::size_t idx = 0; idx < a.size(); ++idx) acc += std::conj(a.amp(idx)) * b.amp(idx);
  return acc;
}

double norm(const StateVector& psi) {
  double acc = 0.0;
  for (std::size_t idx = 0; idx < psi.size(); ++idx) acc += std::norm(psi.amp(idx));
  return std::sqrt(acc);
}

bool is_normalized(const StateVector& psi, double tol) {
  return std::abs(norm(psi) - 1.0) <= tol;
}

std::complex<double> expectation(const StateVector& psi, const CliffordElement& h) {
  return inner(psi, apply_element(h, psi));
}

StateVector read_state(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag) || tag != "qubits" || !(in >> n))
    throw std::runtime_error("state file: expected header 'qubits n'");
  if (n < 1 || n > max_state_qubits())
    throw std::runtime_error("state file: qubit count out of range [1, " +
                             std::to_string(max_state_qubits()) + "]");
  StateVector psi(n);
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    std::string token;
    if (!(in >> token))
      throw std::runtime_error("state file: missing amplitude " + std::to_string(idx));
    const std::complex<double> v = parse_complex_pair(token);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("state file: amplitude is not finite");
    psi.amp(idx) = v;
  }
  return psi;
}

void write_state(std::ostream& out, const StateVector& psi) {
  out << "qubits " << psi.num_qubits() << '\n';
  for (std::size_t idx = 0; idx < psi.size(); ++idx)
    out << format_complex_pair(psi.amp(idx)) << '\n';
}

}  // namespace cliffsim
