#pragma once

#include <complex>
#include <compare>
#include <map>
#include <string>
#include <string_view>

#include "cliffsim/pauli_string.hpp"

namespace cliffsim {

/// Canonical index of a phase-0 Pauli string. Ordering is lexicographic on
/// (z_mask, x_mask), which puts the identity first and groups the diagonal
/// strings ahead of the off-diagonal ones.
struct PauliKey {
  std::uint64_t z = 0;
  std::uint64_t x = 0;
  auto operator<=>(const PauliKey&) const = default;
};

/// Finite linear combination of phase-0 Pauli strings with complex
/// coefficients: a general element of the complex Clifford algebra on
/// 2n generators. Phases of inserted strings are folded into the
/// coefficient, so the term keys are always canonical. Exact zeros are
/// dropped on insertion; inexact small coefficients survive until an
/// explicit prune.
class CliffordElement {
 public:
  using Coeff = std::complex<double>;
  using TermMap = std::map<PauliKey, Coeff>;

  explicit CliffordElement(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits)
      throw std::invalid_argument("element: qubit count out of range [1, 64]");
  }

  static CliffordElement identity(int n, Coeff c = 1.0) {
    CliffordElement e(n);
    e.add_term(PauliKey{}, c);
    return e;
  }

  static CliffordElement from_string(const PauliString& p, Coeff c = 1.0) {
    CliffordElement e(p.n);
    e.add_term(p, c);
    return e;
  }

  int num_qubits() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const PauliKey& k) const {
    const auto it = terms_.find(k);
    return it == terms_.end() ? Coeff{0.0} : it->second;
  }

  /// Coefficient of a possibly phased string: the value c such that the
  /// stored canonical term equals c * p.
  Coeff coefficient(const PauliString& p) const {
    return mul_ipow(coefficient(PauliKey{p.z_mask, p.x_mask}), -p.phase);
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  /// Adds c * i^{p.phase} to the canonical term of p's masks.
  void add_term(const PauliString& p, Coeff c) {
    if (p.n != n_) throw std::invalid_argument("element: string qubit count differs");
    add_term(PauliKey{p.z_mask, p.x_mask}, mul_ipow(c, p.phase));
  }

  void add_term(const PauliKey& k, Coeff c) {
    if ((k.z | k.x) & ~mask_low(n_))
      throw std::invalid_argument("element: key bits beyond qubit count");
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) it->second += c;
    if (it->second == Coeff{0.0}) terms_.erase(it);
  }

  /// The phase-0 string a canonical key stands for.
  PauliString string_at(const PauliKey& k) const { return PauliString(n_, k.x, k.z, 0); }

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

 private:
  int n_;
  TermMap terms_;
};

CliffordElement elem_add(const CliffordElement& a, const CliffordElement& b);
CliffordElement elem_scale(const CliffordElement& a, CliffordElement::Coeff s);
/// Term-by-term product with exact integer phase bookkeeping per string pair.
CliffordElement elem_mul(const CliffordElement& a, const CliffordElement& b);

inline CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  return elem_add(a, b);
}
CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
CliffordElement operator-(const CliffordElement& a);
inline CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  return elem_mul(a, b);
}
inline CliffordElement operator*(CliffordElement::Coeff s, const CliffordElement& a) {
  return elem_scale(a, s);
}
inline CliffordElement operator*(const CliffordElement& a, CliffordElement::Coeff s) {
  return elem_scale(a, s);
}

/// Conjugate-transpose. Canonical strings are Hermitian, so this conjugates
/// coefficients termwise.
CliffordElement adjoint(const CliffordElement& a);

/// ab + ba.
CliffordElement anticommutator(const PauliString& a, const PauliString& b);
CliffordElement anticommutator(const CliffordElement& a, const CliffordElement& b);

/// Copy with every |coefficient| <= tol removed.
CliffordElement prune(const CliffordElement& a, double tol = 1e-14);

/// Element text: terms joined by +/-, each "coeff LETTERS" with an optional
/// '*' separator; coefficient literals are real ("2", "0.5"), imaginary
/// ("i", "2i") or parenthesized complex ("(1+2i)"); a missing coefficient
/// means 1. Letters are I X Y Z, leftmost letter = highest qubit. All terms
/// must have equal length. Throws std::runtime_error with a position on
/// malformed input.
CliffordElement parse_string(std::string_view text);

/// Deterministic canonical text, parseable by parse_string; terms in key
/// order, 17 significant digits, unit coefficients omitted unless
/// always_show_coeff is set. parse_string(format_string(a)) == a exactly.
std::string format_string(const CliffordElement& a, bool always_show_coeff = false);

}  // namespace cliffsim
