#include "cliffsim/dense_matrix.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "cliffsim/number_text.hpp"

namespace cliffsim {

namespace {

void check_dim(std::size_t dim) {
  if (dim == 0 || dim > kMaxDenseDim || !std::has_single_bit(dim))
    throw std::invalid_argument("dense matrix: dimension must be a power of two in [1, 1024]");
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) { check_dim(dim); }

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) m.at(j, j) = 1.0;
  return m;
}

const Mat2 kSigmaI{{{1, 0}, {0, 0}, {0, 0}, {1, 0}}};
const Mat2 kSigmaX{{{0, 0}, {1, 0}, {1, 0}, {0, 0}}};
const Mat2 kSigmaY{{{0, 0}, {0, -1}, {0, 1}, {0, 0}}};
const Mat2 kSigmaZ{{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}};

const Mat2& sigma_letter(char letter) {
  switch (letter) {
    case 'I': return kSigmaI;
    case 'X': return kSigmaX;
    case 'Y': return kSigmaY;
    case 'Z': return kSigmaZ;
    default: throw std::invalid_argument("sigma_letter: letter must be one of I X Y Z");
  }
}

DenseMatrix kron(const Mat2& a, const DenseMatrix& b) {
  const std::size_t d = b.dim();
  if (2 * d > kMaxDenseDim)
    throw std::invalid_argument("kron: dimension would exceed 1024");
  DenseMatrix out(2 * d);
  for (std::size_t br = 0; br < 2; ++br)
    for (std::size_t bc = 0; bc < 2; ++bc) {
      const std::complex<double> f = a[br * 2 + bc];
      if (f == std::complex<double>{0.0}) continue;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) out.at(br * d + r, bc * d + c) = f * b.at(r, c);
    }
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix product: dimensions differ");
  const std::size_t d = a.dim();
  DenseMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const std::complex<double> f = a.at(r, k);
      if (f == std::complex<double>{0.0}) continue;
      for (std::size_t c = 0; c < d; ++c) out.at(r, c) += f * b.at(k, c);
    }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix sum: dimensions differ");
  DenseMatrix out = a;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) += b.at(r, c);
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix difference: dimensions differ");
  DenseMatrix out = a;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) -= b.at(r, c);
  return out;
}

DenseMatrix operator*(std::complex<double> s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) out.at(r, c) *= s;
  return out;
}

DenseMatrix adjoint(const DenseMatrix& m) {
  DenseMatrix out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out.at(c, r) = std::conj(m.at(r, c));
  return out;
}

std::complex<double> trace(const DenseMatrix& m) {
  std::complex<double> t = 0.0;
  for (std::size_t j = 0; j < m.dim(); ++j) t += m.at(j, j);
  return t;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: dimensions differ");
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      m = std::max(m, std::abs(a.at(r, c) - b.at(r, c)));
  return m;
}

double max_abs(const DenseMatrix& m) {
  double v = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) v = std::max(v, std::abs(m.at(r, c)));
  return v;
}

namespace {

constexpr int kMaxDenseQubits = 10;

void check_dense_n(int n) {
  if (n > kMaxDenseQubits)
    throw std::invalid_argument("dense realization: qubit count exceeds 10");
}

}  // namespace

DenseMatrix to_matrix(const PauliString& p) {
  check_dense_n(p.n);
  DenseMatrix m(1);
  m.at(0, 0) = 1.0;
  for (int k = 0; k < p.n; ++k) m = kron(sigma_letter(p.letter(k)), m);
  if (p.phase != 0) m = ipow(p.phase) * m;
  return m;
}

DenseMatrix to_matrix(const CliffordElement& a) {
  check_dense_n(a.num_qubits());
  DenseMatrix out(std::size_t{1} << a.num_qubits());
  for (const auto& [k, c] : a.terms()) {
    const DenseMatrix g = to_matrix(a.string_at(k));
    for (std::size_t r = 0; r < out.dim(); ++r)
      for (std::size_t col = 0; col < out.dim(); ++col) out.at(r, col) += c * g.at(r, col);
  }
  return out;
}

CliffordElement decompose(const DenseMatrix& m) {
  if (m.dim() < 2)
    throw std::invalid_argument("decompose: dimension 1 has no qubit structure");
  const int n = std::countr_zero(m.dim());
  const std::uint64_t size = m.dim();
  CliffordElement out(n);
  for (std::uint64_t z = 0; z < size; ++z) {
    for (std::uint64_t x = 0; x < size; ++x) {
      // tr(g M) = sum_k alpha_k M[k][k^x], alpha_k the k-th entry weight of
      // the phase-0 string g: i^{popcount(x&z)} (-1)^{popcount(k&z)}.
      const int base = std::popcount(x & z) & 3;
      std::complex<double> acc = 0.0;
      for (std::uint64_t k = 0; k < size; ++k) {
        const int ph = (base + 2 * (std::popcount(k & z) & 1)) & 3;
        acc += mul_ipow(m.at(k, k ^ x), ph);
      }
      if (acc != std::complex<double>{0.0})
        out.add_term(PauliKey{z, x}, acc / static_cast<double>(size));
    }
  }
  return out;
}

bool is_hermitian(const DenseMatrix& m, double tol) {
  return max_abs_diff(m, adjoint(m)) <= tol;
}

bool is_unitary(const DenseMatrix& m, double tol) {
  return max_abs_diff(m * adjoint(m), DenseMatrix::identity(m.dim())) <= tol;
}

DenseMatrix exp_i_hermitian(const CliffordElement& h) {
  check_dense_n(h.num_qubits());
  CliffordElement real_part(h.num_qubits());
  for (const auto& [k, c] : h.terms()) {
    if (std::abs(c.imag()) > 1e-12)
      throw std::invalid_argument("exp_i_hermitian: coefficient has an imaginary part");
    real_part.add_term(k, std::complex<double>{c.real(), 0.0});
  }
  // Real coefficients on Hermitian strings make the matrix exactly
  // Hermitian, so the spectral route is safe.
  const DenseMatrix hm = to_matrix(real_part);
  const auto d = static_cast<Eigen::Index>(hm.dim());
  Eigen::MatrixXcd em(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      em(r, c) = hm.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("exp_i_hermitian: eigendecomposition failed");
  Eigen::VectorXcd phases(d);
  for (Eigen::Index j = 0; j < d; ++j)
    phases(j) = std::polar(1.0, solver.eigenvalues()(j));
  const Eigen::MatrixXcd u =
      solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
  DenseMatrix out(hm.dim());
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c)
      out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = u(r, c);
  return out;
}

DenseMatrix read_matrix(std::istream& in) {
  std::string tag;
  std::size_t dim = 0;
  if (!(in >> tag) || tag != "dim" || !(in >> dim))
    throw std::runtime_error("matrix file: expected header 'dim d'");
  if (dim == 0 || dim > kMaxDenseDim || !std::has_single_bit(dim))
    throw std::runtime_error("matrix file: dimension must be a power of two in [1, 1024]");
  DenseMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      std::string token;
      if (!(in >> token))
        throw std::runtime_error("matrix file: missing entry at row " + std::to_string(r));
      const std::complex<double> v = parse_complex_pair(token);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::runtime_error("matrix file: entry is not finite");
      m.at(r, c) = v;
    }
  return m;
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << "dim " << m.dim() << '\n';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      if (c != 0) out << ' ';
      out << format_complex_pair(m.at(r, c));
    }
    out << '\n';
  }
}

}  // namespace cliffsim
