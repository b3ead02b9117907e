#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cliffsim/clifford_element.hpp"

namespace cliffsim {

inline constexpr std::size_t kMaxDenseDim = 1024;  // 2^10

/// Row-major square complex matrix; dimension a power of two, at most 1024.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t dim);
  static DenseMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::complex<double>& at(std::size_t row, std::size_t col) { return a_[row * dim_ + col]; }
  const std::complex<double>& at(std::size_t row, std::size_t col) const {
    return a_[row * dim_ + col];
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<std::complex<double>> a_;
};

using Mat2 = std::array<std::complex<double>, 4>;  // row-major 2x2

extern const Mat2 kSigmaI;
extern const Mat2 kSigmaX;
extern const Mat2 kSigmaY;
extern const Mat2 kSigmaZ;

/// The 2x2 letter matrix for 'I', 'X', 'Y' or 'Z'.
const Mat2& sigma_letter(char letter);

/// a (x) b: the left factor indexes the outer 2x2 block structure.
DenseMatrix kron(const Mat2& a, const DenseMatrix& b);

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(std::complex<double> s, const DenseMatrix& a);
DenseMatrix adjoint(const DenseMatrix& m);
std::complex<double> trace(const DenseMatrix& m);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs(const DenseMatrix& m);

/// Kronecker product of the string's letters (leftmost letter outermost),
/// scaled by i^phase. Exact: every entry is a power of i or zero.
/// Requires n <= 10.
DenseMatrix to_matrix(const PauliString& p);

/// Sum of coefficient * to_matrix(string) over the element's terms.
DenseMatrix to_matrix(const CliffordElement& a);

/// Inverse of to_matrix: coefficients tr(g M)/2^n over all 4^n canonical
/// strings g, with n read off the dimension (dim >= 2). Exact zeros are
/// dropped; round-trips to_matrix exactly for power-of-i entries.
CliffordElement decompose(const DenseMatrix& m);

/// max |(M M^dagger - 1)_{jk}| <= tol.
bool is_unitary(const DenseMatrix& m, double tol = 1e-10);
/// max |(M - M^dagger)_{jk}| <= tol.
bool is_hermitian(const DenseMatrix& m, double tol = 1e-10);

/// exp(i H) for an element H with real coefficients (|Im c| <= 1e-12,
/// otherwise std::invalid_argument): unitary image of a Hermitian
/// generator, computed by spectral decomposition. Requires n <= 10.
DenseMatrix exp_i_hermitian(const CliffordElement& h);

/// Matrix file: line "dim d", then d lines of d whitespace-separated
/// complex literals "a+bi". 17-significant-digit output; bit-exact
/// round trip.
DenseMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const DenseMatrix& m);

}  // namespace cliffsim
