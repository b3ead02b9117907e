#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cliffsim/clifford_element.hpp"
#include "cliffsim/dense_matrix.hpp"

namespace cliffsim {

inline constexpr int kMaxStateQubits = 26;

/// Returns the configured qubit ceiling for state allocation: the value of
/// CLIFFSIM_MAX_QUBITS clamped to [1, 26], or 20 when unset or unparsable.
int max_state_qubits();

/// 2^n complex amplitudes. Basis index bit k (k-th least significant)
/// is the letter on qubit k, so the written ket |l1 l2 ... ln> has l1 in
/// the highest bit.
class StateVector {
 public:
  /// All amplitudes zero.
  explicit StateVector(int n);

  int num_qubits() const { return n_; }
  std::size_t size() const { return amps_.size(); }
  std::complex<double>& amp(std::size_t index) { return amps_[index]; }
  const std::complex<double>& amp(std::size_t index) const { return amps_[index]; }

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int n_;
  std::vector<std::complex<double>> amps_;
};

/// |l1 l2 ... ln> for bits written in ket order (bits[0] = l1 = highest
/// index bit). Entries must be 0 or 1.
StateVector basis_state(const std::vector<int>& bits);

/// g|L> = i^{phase + popcount(x&z)} (-1)^{popcount(L&z)} |L xor x>: a single
/// sweep pairing index L with L xor x. Amplitudes move by component swaps
/// and negations only, so basis states map to basis states exactly.
StateVector apply_string(const PauliString& p, const StateVector& psi);

/// Sum of coefficient * apply_string over the element's terms.
StateVector apply_element(const CliffordElement& a, const StateVector& psi);

/// Matrix-vector product; the matrix dimension must equal 2^n.
StateVector apply_unitary_dense(const DenseMatrix& u, const StateVector& psi);

/// <a|b>, conjugate-linear in the first argument.
std::complex<double> inner(const StateVector& a, const StateVector& b);
double norm(const StateVector& psi);
bool is_normalized(const StateVector& psi, double tol = 1e-10);

/// <psi| h |psi>.
std::complex<double> expectation(const StateVector& psi, const CliffordElement& h);

/// State file: line "qubits n", then 2^n lines of one complex literal
/// "a+bi" each, index order. 17-significant-digit output; bit-exact
/// round trip.
StateVector read_state(std::istream& in);
void write_state(std::ostream& out, const StateVector& psi);

}  // namespace cliffsim
