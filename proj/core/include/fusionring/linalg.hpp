#pragma once

#include "fusionring/numeric.hpp"

#include <cstddef>
#include <vector>

namespace fusionring {

using CVector = std::vector<Complex>;

/// Dense row-major complex matrix at working precision.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CMatrix adjoint() const;
  CVector column(std::size_t j) const;
  void set_column(std::size_t j, const CVector& v);
  Complex trace() const;
  Real frobenius_norm() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(const Complex& s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& v);
inline CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
inline CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
inline CMatrix operator*(CMatrix a, const Complex& s) { return a *= s; }

/// Kronecker product a ⊗ b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Hermitian inner product <u, v> = sum conj(u_k) v_k.
Complex dot(const CVector& u, const CVector& v);
Real norm(const CVector& v);
void normalize(CVector& v);

/// Orthonormalizes the columns in place (modified Gram-Schmidt, two passes).
void orthonormalize_columns(CMatrix& q);

/// Eigen-decomposition of a Hermitian matrix: eigenvalues ascending,
/// orthonormal eigenvectors in the matching columns.
struct HermitianEigen {
  std::vector<Real> values;
  CMatrix vectors;
};

/// Cyclic two-sided Jacobi rotations at working precision. Throws
/// NumericalError if the off-diagonal mass does not vanish within the sweep cap.
HermitianEigen hermitian_eigen(const CMatrix& h, int max_sweeps = 80);

/// Largest absolute entry of a - a^dagger; zero for Hermitian input.
Real hermitian_defect(const CMatrix& a);

}  // namespace fusionring
