#pragma once

// Dense complex linear algebra for small square matrices.
//
// Everything here is self-contained: a cyclic Jacobi eigensolver for
// Hermitian matrices, a one-sided (Hestenes) Jacobi SVD, polar decomposition,
// trace-weighted Schatten norms and support projections. Sizes of interest
// are dim <= ~200; nothing is blocked or vectorised.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ncmult {

using cplx = std::complex<double>;

/// Global default tolerance, relative to the Frobenius norm of the operand.
inline constexpr double kDefaultTol = 1e-9;

/// Jacobi sweeps allowed before NoConvergence is raised.
inline constexpr int kMaxSweeps = 100;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major entries; throws DimMismatch if entries.size() != dim*dim and
  /// InvalidMatrix if any entry is NaN or infinite.
  ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix diagonal(std::span<const double> d);
  /// Matrix unit e_ij.
  static ComplexMatrix unit(std::size_t dim, std::size_t i, std::size_t j);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  std::span<const cplx> data() const { return data_; }
  std::span<cplx> data() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

/// Entrywise product.
ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// Frobenius distance ||a - b||_F.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// A* A (the Gram matrix of the columns).
ComplexMatrix gram(const ComplexMatrix& a);

/// Columns as an orthonormal basis test: ||A*A - I||_F.
double unitarity_defect(const ComplexMatrix& a);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k belongs to eigenvalues[k]
};

struct SingularValueDecomposition {
  ComplexMatrix u;
  std::vector<double> sigma;  // descending
  ComplexMatrix v;
};

struct PolarDecomposition {
  ComplexMatrix w;  // partial isometry, w*w = s(b)
  ComplexMatrix b;  // positive semidefinite, b = |a| on the numerical support
};

/// Cyclic complex Jacobi. Throws NotHermitian when ||H - H*||_F > tol ||H||_F
/// and NoConvergence after kMaxSweeps sweeps.
EigenDecomposition hermitian_eig(const ComplexMatrix& h, double tol = kDefaultTol);

/// One-sided Jacobi on the columns of A: this diagonalises A*A implicitly and
/// reads off U = A V Sigma^+. Null columns of U are completed to a unitary.
SingularValueDecomposition svd(const ComplexMatrix& a);

/// (w * sum_i sigma_i^p)^(1/p); p may be +infinity. Throws InvalidExponent for
/// p < 1 and std::invalid_argument for trace_weight <= 0.
double schatten_norm(const ComplexMatrix& a, double p, double trace_weight = 1.0);

/// Same as schatten_norm but from precomputed singular values.
double schatten_norm_from_sigma(std::span<const double> sigma, double p, double trace_weight = 1.0);

/// A = wB with B >= 0 and w*w = s(B). Singular values at or below
/// tol * sigma_max are treated as zero in both factors.
PolarDecomposition polar_decompose(const ComplexMatrix& a, double tol = kDefaultTol);

/// Orthogonal projection onto the range of a positive semidefinite B.
/// Eigenvalues at or below tol * ||B|| count as zero. Throws NotPositive if B
/// is not Hermitian or has an eigenvalue below -tol * ||B||.
ComplexMatrix support_projection(const ComplexMatrix& b, double tol = kDefaultTol);

/// Moore-Penrose inverse of a positive semidefinite B (same threshold rule as
/// support_projection).
ComplexMatrix psd_pseudo_inverse(const ComplexMatrix& b, double tol = kDefaultTol);

/// Spectral projections of a Hermitian matrix, one per eigenvalue cluster.
/// Eigenvalues closer than cluster_tol * max(1, ||H||) share a projection.
std::vector<ComplexMatrix> spectral_projections(const ComplexMatrix& h, double cluster_tol = 1e-8);

/// Operator (spectral) norm, the largest singular value.
double operator_norm(const ComplexMatrix& a);

}  // namespace ncmult
