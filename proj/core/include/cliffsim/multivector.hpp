#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "cliffsim/clifford_element.hpp"

namespace cliffsim {

inline constexpr int kMaxGenerators = 16;

/// Generator squares of a real Clifford algebra: the first `neg` generators
/// square to -1, the remaining `pos` square to +1.
struct Signature {
  int neg = 0;
  int pos = 0;

  Signature(int neg_count, int pos_count) : neg(neg_count), pos(pos_count) {
    if (neg < 0 || pos < 0 || neg + pos > kMaxGenerators)
      throw std::invalid_argument("signature: generator counts out of range [0, 16]");
  }

  int count() const { return neg + pos; }

  /// Square of generator `index` (0-based): -1 or +1.
  int square(int index) const {
    if (index < 0 || index >= count())
      throw std::invalid_argument("signature: generator index out of range");
    return index < neg ? -1 : 1;
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Basis blade as a generator subset: bit i set means e_{i+1} is a factor,
/// factors in increasing index order.
using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask b) { return std::popcount(b); }

struct BladeProduct {
  int sign;  // -1 or +1
  BladeMask blade;
};

/// Product of two basis blades: sign from counting transpositions needed to
/// interleave b's factors into a, times the square of each repeated
/// generator; resulting blade is the symmetric difference.
BladeProduct blade_mul(const Signature& sig, BladeMask a, BladeMask b);

/// Sign of the reverse of a grade-k blade: (-1)^{k(k-1)/2}.
inline int reverse_sign(BladeMask b) {
  const int k = blade_grade(b);
  return (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
}

/// Element of a real Clifford algebra with at most 16 generators: a sparse
/// real linear combination of basis blades. Exact zeros are dropped on
/// insertion.
class Multivector {
 public:
  using TermMap = std::map<BladeMask, double>;

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, double c) {
    Multivector m(sig);
    m.add_term(0, c);
    return m;
  }

  static Multivector blade(Signature sig, BladeMask b, double c = 1.0) {
    Multivector m(sig);
    m.add_term(b, c);
    return m;
  }

  /// e_{index+1}.
  static Multivector basis_vector(Signature sig, int index) {
    if (index < 0 || index >= sig.count())
      throw std::invalid_argument("multivector: generator index out of range");
    return blade(sig, BladeMask{1} << index);
  }

  /// Grade-1 element with the given coordinates (one per generator).
  static Multivector from_vector(Signature sig, std::span<const double> coords) {
    if (static_cast<int>(coords.size()) != sig.count())
      throw std::invalid_argument("multivector: coordinate count differs from generator count");
    Multivector m(sig);
    for (int i = 0; i < sig.count(); ++i) m.add_term(BladeMask{1} << i, coords[i]);
    return m;
  }

  const Signature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  double coefficient(BladeMask b) const {
    const auto it = terms_.find(b);
    return it == terms_.end() ? 0.0 : it->second;
  }

  double scalar_part() const { return coefficient(0); }

  void add_term(BladeMask b, double c) {
    if (b & ~((BladeMask{1} << sig_.count()) - 1))
      throw std::invalid_argument("multivector: blade bits beyond generator count");
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [b, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  bool even_grade_only() const {
    for (const auto& [b, c] : terms_)
      if (blade_grade(b) % 2 != 0) return false;
    return true;
  }

  /// Grade-1 coefficients as a dense coordinate vector.
  std::vector<double> vector_part() const {
    std::vector<double> v(static_cast<std::size_t>(sig_.count()), 0.0);
    for (int i = 0; i < sig_.count(); ++i) v[static_cast<std::size_t>(i)] = coefficient(BladeMask{1} << i);
    return v;
  }

  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  Signature sig_;
  TermMap terms_;
};

Multivector mv_add(const Multivector& a, const Multivector& b);
Multivector mv_scale(const Multivector& a, double s);
Multivector mv_mul(const Multivector& a, const Multivector& b);

inline Multivector operator+(const Multivector& a, const Multivector& b) { return mv_add(a, b); }
Multivector operator-(const Multivector& a, const Multivector& b);
Multivector operator-(const Multivector& a);
inline Multivector operator*(const Multivector& a, const Multivector& b) { return mv_mul(a, b); }
inline Multivector operator*(double s, const Multivector& a) { return mv_scale(a, s); }
inline Multivector operator*(const Multivector& a, double s) { return mv_scale(a, s); }

/// Reverses the factor order of every blade: grade-k terms pick up
/// (-1)^{k(k-1)/2}.
Multivector reverse(const Multivector& a);

/// Copy with every |coefficient| <= tol removed.
Multivector mv_prune(const Multivector& a, double tol = 1e-14);

/// Faithful 2x2 real matrix image of the two-generator algebra whose
/// generators both square to +1: e_1 -> ((0,1),(1,0)), e_2 -> ((1,0),(0,-1)),
/// extended multiplicatively (e_1 e_2 -> ((0,-1),(1,0))).
std::array<std::array<double, 2>, 2> matrix_rep_cl02(const Multivector& a);

/// Multiplicative embedding of the two-generator algebra whose generators
/// both square to -1 into the complex Pauli algebra on one qubit:
/// e_1 -> i sigma_x, e_2 -> i sigma_y, hence e_1 e_2 -> -i sigma_z.
CliffordElement embed_pauli(const Multivector& a);

/// Isomorphism from the even subalgebra on N generators onto the full
/// algebra on N-1 generators, g_i = e_i e_N with the images relabeled so
/// the negative-square generators come first. Throws std::invalid_argument
/// if a term has odd grade.
Multivector even_iso(const Multivector& a);

/// The signature even_iso maps into.
Signature even_iso_signature(const Signature& sig);

}  // namespace cliffsim
