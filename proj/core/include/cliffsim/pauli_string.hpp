#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cliffsim {

inline constexpr int kMaxQubits = 64;

/// Low `bits` bits set; valid for 0 <= bits <= 64.
inline std::uint64_t mask_low(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

/// i^k as an exact complex value; any integer k.
inline std::complex<double> ipow(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// c * i^k via component swaps and negations only, so the product is exact.
inline std::complex<double> mul_ipow(std::complex<double> c, int k) {
  switch (k & 3) {
    case 0: return c;
    case 1: return {-c.imag(), c.real()};
    case 2: return {-c.real(), -c.imag()};
    default: return {c.imag(), -c.real()};
  }
}

/// A signed basis element of the 2n-generator complex Clifford algebra:
/// an n-letter Pauli word with a global i^phase factor.
///
/// The letter on qubit k is encoded by bit k of the two masks:
/// (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y. Qubit k is the k-th tensor
/// factor from the right, so the dense realization of a phase-0 string is
/// the literal Kronecker product of its letters, Hermitian and involutory
/// by construction.
struct PauliString {
  int n = 1;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  int phase = 0;  // global factor i^phase, 0..3

  PauliString(int n_, std::uint64_t x, std::uint64_t z, int ph = 0)
      : n(n_), x_mask(x), z_mask(z), phase(ph) {
    if (n < 1 || n > kMaxQubits)
      throw std::invalid_argument("pauli string: qubit count out of range [1, 64]");
    if ((x_mask | z_mask) & ~mask_low(n))
      throw std::invalid_argument("pauli string: mask bits beyond qubit count");
    if (phase < 0 || phase > 3)
      throw std::invalid_argument("pauli string: phase must be in {0,1,2,3}");
  }

  static PauliString identity(int n) { return PauliString(n, 0, 0, 0); }

  char letter(int qubit) const {
    const bool x = (x_mask >> qubit) & 1;
    const bool z = (z_mask >> qubit) & 1;
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  /// Letters with qubit n-1 first (the leftmost tensor factor).
  std::string letters() const {
    std::string s(static_cast<std::size_t>(n), 'I');
    for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(n - 1 - k)] = letter(k);
    return s;
  }

  /// Number of non-identity letters.
  int weight() const { return std::popcount(x_mask | z_mask); }

  bool is_identity() const { return x_mask == 0 && z_mask == 0 && phase == 0; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// Exact product: masks xor, phase tracked mod 4 so that the dense
/// realization of mul(a,b) equals dense(a)*dense(b) entrywise.
///
/// Derivation: letter(x,z) = i^{xz} X^x Z^z and ZX = -XZ, so the i-exponent
/// picked up per qubit is x1*z1 + x2*z2 + 2*z1*x2 - x3*z3 with
/// (x3,z3) = (x1^x2, z1^z2). Validated against the exhaustive dense oracle
/// over all letter pairs.
inline PauliString mul(const PauliString& a, const PauliString& b) {
  if (a.n != b.n) throw std::invalid_argument("pauli mul: qubit counts differ");
  const std::uint64_t x = a.x_mask ^ b.x_mask;
  const std::uint64_t z = a.z_mask ^ b.z_mask;
  const int phase = (a.phase + b.phase + std::popcount(a.x_mask & a.z_mask) +
                     std::popcount(b.x_mask & b.z_mask) +
                     2 * std::popcount(a.z_mask & b.x_mask) + 3 * std::popcount(x & z)) &
                    3;
  return PauliString(a.n, x, z, phase);
}

inline PauliString operator*(const PauliString& a, const PauliString& b) { return mul(a, b); }

/// Multiplicative inverse: same masks, negated phase (mul(p, inverse(p)) is
/// the identity string for every phased string).
inline PauliString inverse(const PauliString& p) {
  return PauliString(p.n, p.x_mask, p.z_mask, (4 - p.phase) & 3);
}

/// Generator j of the 2n-generator presentation, 0 <= j < 2n: sigma_x
/// (even j) or sigma_y (odd j) on qubit j/2 with sigma_z on every lower
/// qubit. All 2n generators pairwise anticommute and square to identity.
inline PauliString generator(int n, int j) {
  if (n < 1 || n > kMaxQubits)
    throw std::invalid_argument("generator: qubit count out of range [1, 64]");
  if (j < 0 || j >= 2 * n) throw std::invalid_argument("generator: index out of range [0, 2n)");
  const int k = j / 2;
  const std::uint64_t x = std::uint64_t{1} << k;
  const std::uint64_t z = (j % 2 == 0) ? mask_low(k) : mask_low(k + 1);
  return PauliString(n, x, z, 0);
}

}  // namespace cliffsim
