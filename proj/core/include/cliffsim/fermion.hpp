#pragma once

#include <vector>

#include "cliffsim/clifford_element.hpp"
#include "cliffsim/state_vector.hpp"

namespace cliffsim {

inline constexpr int kMaxFermionModes = 12;

/// Grassmann generator d_l = -i g_{2l} + g_{2l+1} (g_j the anticommuting
/// string generators); squares to zero exactly.
CliffordElement grassmann_d(int n, int l);

/// Mode-l annihilation operator a_l = (g_{2l} + i g_{2l+1}) / 2. Realized on
/// qubit l as (sigma_x + i sigma_y)/2 with a sigma_z chain on the lower
/// qubits, which carries the fermionic exchange sign.
CliffordElement annihilation(int n, int l);

/// a_l^dagger = adjoint(annihilation(n, l)).
CliffordElement creation(int n, int l);

/// a_l^dagger a_l; diagonal with eigenvalue 1 on occupied mode l.
CliffordElement number_operator(int n, int l);

/// Max |coefficient| violations of the canonical anticommutation relations
/// over all mode pairs, computed symbolically; every field is exactly zero
/// when the construction is correct.
struct CarReport {
  int n = 0;
  double max_aa = 0.0;           // {a_i, a_j} = 0
  double max_cc = 0.0;           // {a_i^dag, a_j^dag} = 0
  double max_ca = 0.0;           // {a_i^dag, a_j} = delta_ij
  double max_violation() const;
  bool passed() const { return max_violation() == 0.0; }
};

/// Checks all three relation families for every mode pair; n <= 12.
CarReport verify_car(int n);

/// Applies op to the occupation basis state |occ[0] ... occ[n-1]>, written
/// in ket order: the rightmost position occ[n-1] is mode 0. Equivalent to
/// apply_element(op, basis_state(occ)); occ.size() must equal op's n.
StateVector apply_fermionic(const CliffordElement& op, const std::vector<int>& occ);

}  // namespace cliffsim
