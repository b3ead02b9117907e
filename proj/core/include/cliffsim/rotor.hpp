#pragma once

#include <span>
#include <vector>

#include "cliffsim/multivector.hpp"

namespace cliffsim {

/// Even unit multivector r with r * reverse(r) = 1; acts on vectors by
/// v -> r v r^{-1}, which preserves grade and the quadratic form. r and -r
/// induce the same rotation.
class Rotor {
 public:
  /// Validates even grade and unit norm (within 1e-12).
  explicit Rotor(Multivector mv);

  /// Product of an even number of vectors, each with |v^2| = 1 within
  /// 1e-10, normalized to unit norm afterwards so the rotor invariant holds
  /// to machine precision.
  static Rotor from_vectors(const Signature& sig,
                            const std::vector<std::vector<double>>& vectors);

  /// cos(theta/2) + sin(theta/2) e_{i+1} e_{j+1}; when both generators
  /// square to -1 the conjugation rotates e_{i+1} toward e_{j+1} by theta.
  static Rotor plane_rotation(const Signature& sig, int i, int j, double theta);

  const Multivector& multivector() const { return mv_; }

  /// reverse(r) scaled by 1/(r reverse(r)); equals reverse(r) for an exact
  /// unit rotor.
  Rotor inverse() const;

  friend Rotor operator-(const Rotor& r);
  friend Rotor operator*(const Rotor& a, const Rotor& b);
  friend bool operator==(const Rotor&, const Rotor&) = default;

 private:
  struct Unchecked {};
  Rotor(Multivector mv, Unchecked) : mv_(std::move(mv)) {}
  Multivector mv_;
};

/// r v r^{-1} on a grade-1 argument. The result is grade-1 up to roundoff;
/// residual at other grades beyond 1e-9 signals an implementation fault and
/// throws std::logic_error.
std::vector<double> rotate(const Rotor& r, std::span<const double> v);

/// Columns are the images of the basis vectors; orthogonal with determinant
/// +1 for Euclidean signatures. rotation_matrix(r) == rotation_matrix(-r).
std::vector<std::vector<double>> rotation_matrix(const Rotor& r);

}  // namespace cliffsim
