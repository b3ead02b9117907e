#include "cliffsim/fermion.hpp"

namespace cliffsim {

namespace {

void check_mode(int n, int l) {
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("fermion: mode count out of range");
  if (l < 0 || l >= n) throw std::invalid_argument("fermion: mode index out of range");
}

}  // namespace

CliffordElement grassmann_d(int n, int l) {
  check_mode(n, l);
  // d_l = e_{2l} + i e_{2l+1} with e_j = -i g_j: -i g_{2l} + g_{2l+1}.
  CliffordElement d(n);
  d.add_term(generator(n, 2 * l), std::complex<double>{0.0, -1.0});
  d.add_term(generator(n, 2 * l + 1), 1.0);
  return d;
}

CliffordElement annihilation(int n, int l) {
  check_mode(n, l);
  // a_l = (g_{2l} + i g_{2l+1}) / 2: (sigma_x + i sigma_y)/2 on qubit l
  // behind the shared sigma_z chain on qubits 0..l-1.
  CliffordElement a(n);
  a.add_term(generator(n, 2 * l), 0.5);
  a.add_term(generator(n, 2 * l + 1), std::complex<double>{0.0, 0.5});
  return a;
}

CliffordElement creation(int n, int l) { return adjoint(annihilation(n, l)); }

CliffordElement number_operator(int n, int l) {
  check_mode(n, l);
  return elem_mul(creation(n, l), annihilation(n, l));
}

double CarReport::max_violation() const { return std::max({max_aa, max_cc, max_ca}); }

CarReport verify_car(int n) {
  if (n < 1 || n > kMaxFermionModes)
    throw std::invalid_argument("verify_car: mode count out of range [1, 12]");
  CarReport report;
  report.n = n;
  std::vector<CliffordElement> a;
  std::vector<CliffordElement> c;
  for (int l = 0; l < n; ++l) {
    a.push_back(annihilation(n, l));
    c.push_back(creation(n, l));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      report.max_aa = std::max(report.max_aa, anticommutator(a[i], a[j]).max_abs_coeff());
      report.max_cc = std::max(report.max_cc, anticommutator(c[i], c[j]).max_abs_coeff());
      CliffordElement ca = anticommutator(c[i], a[j]);
      if (i == j) ca = ca - CliffordElement::identity(n);
      report.max_ca = std::max(report.max_ca, ca.max_abs_coeff());
    }
  }
  return report;
}

StateVector apply_fermionic(const CliffordElement& op, const std::vector<int>& occ) {
  if (static_cast<int>(occ.size()) != op.num_qubits())
    throw std::invalid_argument("apply_fermionic: occupation length differs from mode count");
  return apply_element(op, basis_state(occ));
}

}  // namespace cliffsim
