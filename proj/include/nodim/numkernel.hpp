#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace nodim {

using cplx = std::complex<double>;

// Dense row-major matrix over C. Real matrices are stored with zero
// imaginary parts; eigh() detects that and runs an all-real sweep.
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {}

  cplx& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  const cplx& at(int i, int j) const {
    return data[static_cast<std::size_t>(i) * cols + j];
  }

  static DenseMatrix identity(int d);
  static DenseMatrix diag(const std::vector<double>& values);
  static DenseMatrix from_real(int r, int c, const std::vector<double>& v);

  bool is_square() const { return rows == cols; }
  bool is_real() const;
  bool is_hermitian(double tol = 1e-12) const;
  DenseMatrix adjoint() const;
  double frobenius_norm() const;
  double trace_real() const;
};

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double alpha, const DenseMatrix& a);
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);

// Frobenius pairing Re tr(A* B); the real inner product of H_d.
double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  DenseMatrix eigenvectors;         // unitary, columns matched to eigenvalues
};

struct SvdResult {
  DenseMatrix left;                     // unitary
  std::vector<double> singular_values;  // nonnegative, descending
  DenseMatrix right;                    // unitary, A = U diag(sigma) V*
};

// Raised when an iterative kernel exhausts its sweep budget; carries the
//residual left at the point of giving up.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

private:
  double residual_;
};

// Hermitian eigendecomposition by cyclic Jacobi sweeps. Deterministic:
// fixed sweep order, ties in the final sort broken by diagonal position.
SpectralDecomposition eigh(const DenseMatrix& a);

// SVD of a square matrix via eigh(A* A) plus left-factor recovery.
SvdResult svd(const DenseMatrix& a);

// Euclidean projection onto {x : x >= 0, sum x = mass}.
std::vector<double> project_simplex(const std::vector<double>& v, double mass);

// Euclidean projection onto the l1 ball of the given radius. Returns the
// input unchanged (bit for bit) when it is already inside.
std::vector<double> project_l1_ball(const std::vector<double>& v, double radius);

}  // namespace nodim
