#include "cliffsim/rotor.hpp"

#include <cmath>

namespace cliffsim {

namespace {

double non_scalar_residual(const Multivector& a) {
  double m = 0.0;
  for (const auto& [blade, c] : a.terms())
    if (blade != 0) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

Rotor::Rotor(Multivector mv) : mv_(std::move(mv)) {
  if (!mv_.even_grade_only())
    throw std::invalid_argument("rotor: multivector has odd-grade terms");
  const Multivector norm = mv_ * reverse(mv_);
  if (std::abs(norm.scalar_part() - 1.0) > 1e-12 || non_scalar_residual(norm) > 1e-12)
    throw std::invalid_argument("rotor: multivector times its reverse is not 1");
}

Rotor Rotor::from_vectors(const Signature& sig,
                          const std::vector<std::vector<double>>& vectors) {
  if (vectors.size() % 2 != 0)
    throw std::invalid_argument("rotor: vector count must be even");
  Multivector product = Multivector::scalar(sig, 1.0);
  for (const auto& coords : vectors) {
    const Multivector v = Multivector::from_vector(sig, coords);
    // Q(v) = v^2 as a scalar; unit-norm vectors have |Q| = 1.
    const double q = (v * v).scalar_part();
    if (std::abs(std::abs(q) - 1.0) > 1e-10)
      throw std::invalid_argument("rotor: vector does not have unit norm");
    product = product * v;
  }
  const double norm = (product * reverse(product)).scalar_part();
  if (norm <= 0.0)
    throw std::invalid_argument("rotor: vector product has non-positive norm");
  return Rotor(mv_scale(product, 1.0 / std::sqrt(norm)), Unchecked{});
}

Rotor Rotor::plane_rotation(const Signature& sig, int i, int j, double theta) {
  if (i == j || i < 0 || j < 0 || i >= sig.count() || j >= sig.count())
    throw std::invalid_argument("rotor: plane indices must be distinct generators");
  if (!std::isfinite(theta)) throw std::invalid_argument("rotor: angle must be finite");
  Multivector mv = Multivector::scalar(sig, std::cos(theta / 2));
  mv.add_term((BladeMask{1} << i) | (BladeMask{1} << j),
              i < j ? std::sin(theta / 2) : -std::sin(theta / 2));
  return Rotor(std::move(mv));
}

Rotor Rotor::inverse() const {
  const Multivector rev = reverse(mv_);
  const double norm = (mv_ * rev).scalar_part();
  return Rotor(mv_scale(rev, 1.0 / norm), Unchecked{});
}

Rotor operator-(const Rotor& r) { return Rotor(mv_scale(r.mv_, -1.0), Rotor::Unchecked{}); }

Rotor operator*(const Rotor& a, const Rotor& b) { return Rotor(mv_mul(a.mv_, b.mv_)); }

std::vector<double> rotate(const Rotor& r, std::span<const double> v) {
  const Multivector vec = Multivector::from_vector(r.multivector().signature(), v);
  const Multivector image = r.multivector() * vec * r.inverse().multivector();
  double residual = 0.0;
  double scale = 1.0;
  for (const auto& [blade, c] : image.terms()) {
    scale = std::max(scale, std::abs(c));
    if (blade_grade(blade) != 1) residual = std::max(residual, std::abs(c));
  }
  if (residual > 1e-9 * scale)
    throw std::logic_error("rotate: conjugation image is not grade-1");
  return image.vector_part();
}

std::vector<std::vector<double>> rotation_matrix(const Rotor& r) {
  const Signature& sig = r.multivector().signature();
  const int n = sig.count();
  std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int col = 0; col < n; ++col) {
    std::vector<double> basis(static_cast<std::size_t>(n), 0.0);
    basis[static_cast<std::size_t>(col)] = 1.0;
    const std::vector<double> image = rotate(r, basis);
    for (int row = 0; row < n; ++row)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          image[static_cast<std::size_t>(row)];
  }
  return m;
}

}  // namespace cliffsim
