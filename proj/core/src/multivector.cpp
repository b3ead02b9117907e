#include "cliffsim/multivector.hpp"

#include <algorithm>
#include <bit>

namespace cliffsim {

BladeProduct blade_mul(const Signature& sig, BladeMask a, BladeMask b) {
  const BladeMask all = (BladeMask{1} << sig.count()) - 1;
  if ((a | b) & ~all)
    throw std::invalid_argument("blade_mul: blade bits beyond generator count");
  // Transpositions moving each factor of b left past the factors of a that
  // have a strictly larger index.
  int swaps = 0;
  for (BladeMask shifted = a >> 1; shifted != 0; shifted >>= 1)
    swaps += std::popcount(shifted & b);
  int sign = (swaps % 2 == 0) ? 1 : -1;
  // Each generator common to both blades meets itself and contributes its
  // square.
  for (BladeMask common = a & b; common != 0; common &= common - 1)
    sign *= sig.square(std::countr_zero(common));
  return {sign, a ^ b};
}

Multivector mv_add(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature())
    throw std::invalid_argument("mv_add: signatures differ");
  Multivector out = a;
  for (const auto& [blade, c] : b.terms()) out.add_term(blade, c);
  return out;
}

Multivector mv_scale(const Multivector& a, double s) {
  Multivector out(a.signature());
  if (s == 0.0) return out;
  for (const auto& [blade, c] : a.terms()) out.add_term(blade, c * s);
  return out;
}

Multivector mv_mul(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature())
    throw std::invalid_argument("mv_mul: signatures differ");
  Multivector out(a.signature());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      const BladeProduct p = blade_mul(a.signature(), ba, bb);
      out.add_term(p.blade, p.sign * ca * cb);
    }
  }
  return out;
}

Multivector operator-(const Multivector& a, const Multivector& b) {
  return mv_add(a, mv_scale(b, -1.0));
}

Multivector operator-(const Multivector& a) { return mv_scale(a, -1.0); }

Multivector reverse(const Multivector& a) {
  Multivector out(a.signature());
  for (const auto& [blade, c] : a.terms()) out.add_term(blade, reverse_sign(blade) * c);
  return out;
}

Multivector mv_prune(const Multivector& a, double tol) {
  Multivector out(a.signature());
  for (const auto& [blade, c] : a.terms())
    if (std::abs(c) > tol) out.add_term(blade, c);
  return out;
}

std::array<std::array<double, 2>, 2> matrix_rep_cl02(const Multivector& a) {
  if (a.signature() != Signature(0, 2))
    throw std::invalid_argument("matrix_rep_cl02: signature must be (0,2)");
  // Basis images: 1 -> I, e1 -> ((0,1),(1,0)), e2 -> ((1,0),(0,-1)),
  // e1e2 -> ((0,-1),(1,0)).
  static const std::array<std::array<std::array<double, 2>, 2>, 4> images = {{
      {{{1.0, 0.0}, {0.0, 1.0}}},
      {{{0.0, 1.0}, {1.0, 0.0}}},
      {{{1.0, 0.0}, {0.0, -1.0}}},
      {{{0.0, -1.0}, {1.0, 0.0}}},
  }};
  std::array<std::array<double, 2>, 2> out{{{0.0, 0.0}, {0.0, 0.0}}};
  for (const auto& [blade, c] : a.terms())
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col)
        out[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] +=
            c * images[blade][static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
  return out;
}

CliffordElement embed_pauli(const Multivector& a) {
  const bool neg2 = a.signature() == Signature(2, 0);
  if (!neg2 && a.signature() != Signature(0, 2))
    throw std::invalid_argument("embed_pauli: signature must be (2,0) or (0,2)");
  CliffordElement out(1);
  for (const auto& [blade, c] : a.terms()) {
    // (2,0): e1 -> i sx, e2 -> i sy, e1e2 -> (i sx)(i sy) = -i sz.
    // (0,2): e1 -> sx, e2 -> sz, e1e2 -> sx sz = -i sy.
    PauliString p = PauliString::identity(1);
    switch (blade) {
      case 0b00: break;
      case 0b01: p = neg2 ? PauliString(1, 1, 0, 1) : PauliString(1, 1, 0, 0); break;
      case 0b10: p = neg2 ? PauliString(1, 1, 1, 1) : PauliString(1, 0, 1, 0); break;
      default:   p = neg2 ? PauliString(1, 0, 1, 3) : PauliString(1, 1, 1, 3); break;
    }
    out.add_term(p, c);
  }
  return out;
}

Signature even_iso_signature(const Signature& sig) {
  const int last = sig.count() - 1;
  if (last < 0) throw std::invalid_argument("even_iso: empty signature");
  int neg = 0;
  for (int i = 0; i < last; ++i)
    if (-sig.square(i) * sig.square(last) == -1) ++neg;
  return Signature(neg, last - neg);
}

Multivector even_iso(const Multivector& a) {
  const Signature sig = a.signature();
  const int last = sig.count() - 1;
  const Signature reduced = even_iso_signature(sig);
  // g_i := e_{i+1} e_N squares to -s_i s_N; relabel so negative squares
  // come first, keeping relative order within each class.
  std::vector<int> relabel(static_cast<std::size_t>(last), 0);
  int next_neg = 0;
  int next_pos = reduced.neg;
  for (int i = 0; i < last; ++i) {
    const bool negative = -sig.square(i) * sig.square(last) == -1;
    relabel[static_cast<std::size_t>(i)] = negative ? next_neg++ : next_pos++;
  }

  Multivector out(reduced);
  for (const auto& [blade, c] : a.terms()) {
    if (blade_grade(blade) % 2 != 0)
      throw std::invalid_argument("even_iso: element has an odd-grade term");
    // e_{j1}..e_{j2k} = (g_{j1}..g_{j2k}) * (-s_N)^k for j's excluding N;
    // a factor e_N folds into the preceding one: e_j e_N = g_j.
    BladeMask body = blade & ~(BladeMask{1} << last);
    const int half = blade_grade(body) / 2;
    double sign = (sig.square(last) == 1 && half % 2 == 1) ? -1.0 : 1.0;
    // Apply the relabeling and count the inversions it introduces.
    std::vector<int> mapped;
    for (BladeMask m = body; m != 0; m &= m - 1)
      mapped.push_back(relabel[static_cast<std::size_t>(std::countr_zero(m))]);
    BladeMask image = 0;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      for (std::size_t j = i + 1; j < mapped.size(); ++j)
        if (mapped[i] > mapped[j]) sign = -sign;
      image |= BladeMask{1} << mapped[i];
    }
    out.add_term(image, sign * c);
  }
  return out;
}

}  // namespace cliffsim
