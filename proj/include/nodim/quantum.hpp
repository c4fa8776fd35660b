#pragma once

#include <functional>
#include <vector>

#include "nodim/helly.hpp"
#include "nodim/numkernel.hpp"
#include "nodim/report.hpp"

namespace nodim {

// Linear measurement system over density matrices: Hermitian operators A_i
// with spectral norm at most 1, targets b_i, tolerance t, locality k.
struct MeasurementSystem {
  std::vector<DenseMatrix> A;
  std::vector<double> b;
  double t = 0.0;
  int k = 1;
  int d = 3;
};

void validate_system(const MeasurementSystem& system);

struct DensityMatrix {
  DenseMatrix matrix;
};

// min eigenvalue >= -tol and |tr - 1| <= tol.
bool is_valid_density(const DenseMatrix& m, double tol = 1e-9);

// Frobenius-nearest density matrix: eigendecompose, project the spectrum
// onto the unit simplex, reassemble.
DensityMatrix project_density(const DenseMatrix& m);

// Frobenius projection onto {X : |<A, X> - b| <= t}.
DenseMatrix project_measurement_slab(const DenseMatrix& m, const DenseMatrix& A,
                                     double b, double t);

// Dykstra cycles over the density-matrix set and the k measurement slabs of
// each selected subset.
std::vector<FeasibilityReport> check_kwise_consistency(
    const MeasurementSystem& system, const SubsetPolicy& policy,
    double tol = 1e-8);

struct MatrixSolveOptions {
  int max_iters = 10000;
  double target = -1.0;
  bool use_target = false;
  std::function<void(const DenseMatrix&)> on_iterate;
};

// Minimizes max_i |<A_i, rho> - b_i| over density matrices by projected
// subgradient descent (step e/sqrt(t), best iterate kept).
DensityMatrix solve_global_state(const MeasurementSystem& system,
                                 const MatrixSolveOptions& options = {});

// Conclusion check: rho is a valid density matrix and the worst residual is
// at most t + 21 sqrt(ln d / k). Requires feasible k-wise reports.
VerificationReport verify_quantum_bound(
    const MeasurementSystem& system, const DensityMatrix& rho,
    const std::vector<FeasibilityReport>& kwise_reports);

struct SparsifyResult {
  std::vector<int> indices;
  std::vector<double> beta;  // uniform 1/k
  double achieved_error = 0.0;   // ||sum beta A - Id||_{S_inf}
  double heuristic_bound = 0.0;  // e (L+1) 21 sqrt((p-1)/k), reporting only
};

// Greedy probe for sparsifying a PSD decomposition sum lambda_i A_i = Id.
// Purely exploratory: the reported bound is a heuristic, not a guarantee.
// `operator_norm_cap` is the caller's bound L on max ||A_i||_{S_inf}.
SparsifyResult sparsify_psd_decomposition(const std::vector<DenseMatrix>& A,
                                          const std::vector<double>& lambda,
                                          int k, double operator_norm_cap);

}  // namespace nodim
