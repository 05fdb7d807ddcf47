#pragma once

// Small dense complex matrices and a cyclic Jacobi eigensolver for the
// Hermitian r x r Gram matrices (r is at most a few dozen here).

#include <cstddef>
#include <vector>

#include "sisframe/signal.hpp"

namespace sisframe {

class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CMatrix adjoint() const;
  CMatrix operator*(const CMatrix& rhs) const;

  /// this * this^H.
  CMatrix gram() const;

  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k belongs to values[k]
  int sweeps = 0;
};

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Only the upper triangle is read.
HermitianEigen hermitian_eigen(const CMatrix& a, double tol = 1e-15, int max_sweeps = 64);

/// Eigen-decomposition of rows * rows^H.  The product and the rotations run
/// in extended precision, which keeps the rounding floor of the zero
/// eigenvalues near 1e-19 * lambda_max instead of 1e-16: a relative singular
/// value threshold of 1e-8 squares to exactly that double-precision floor.
HermitianEigen gram_eigen(const CMatrix& rows, int max_sweeps = 64);

/// Moore-Penrose inverse through eigenvalues: inverts lambda > cutoff,
/// zeroes the rest.
CMatrix hermitian_pseudo_inverse(const HermitianEigen& eig, double cutoff);

}  // namespace sisframe
