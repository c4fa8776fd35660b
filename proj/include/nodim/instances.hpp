#pragma once

#include <cstdint>

#include "nodim/caratheodory.hpp"
#include "nodim/helly.hpp"
#include "nodim/quantum.hpp"
#include "nodim/rng.hpp"
#include "nodim/sketch.hpp"

namespace nodim {

// Seeded instance generators. All randomness flows through SplitMix64 from
// the single seed, so outputs are byte-identical across runs and ports.

// n points in the unit ball of the space, then centered (pass
// centered = false to inspect the raw sample).
PointCloud gen_caratheodory_instance(std::uint64_t seed, const SpaceSpec& space,
                                     int n, bool centered = true);

struct RegressionInstance {
  SlabSystem system;
  std::vector<double> hidden_point;  // witness that makes every subset feasible
};

// Hidden-point construction: ||x0||_1 = 0.9 R, a_i uniform in [-1,1]^d,
// b_i = <a_i, x0> + eta_i with |eta_i| <= noise <= r. Every k-subset of the
// resulting system is feasible with witness x0.
RegressionInstance gen_regression_instance(std::uint64_t seed, int d, int m,
                                           double R, double r, double noise,
                                           int k);

struct QuantumInstance {
  MeasurementSystem system;
  DenseMatrix hidden_state;
};

// Hidden-state analogue: A_i seeded Hermitian scaled to unit spectral norm,
// rho0 a projected seeded Hermitian, b_i = <A_i, rho0> + eta_i with
// |eta_i| <= noise <= t.
QuantumInstance gen_quantum_instance(std::uint64_t seed, int d, int m, double t,
                                     double noise, int k,
                                     bool complex_entries = false);

struct PsdDecomposition {
  std::vector<DenseMatrix> A;
  std::vector<double> lambda;
  double operator_norm = 0.0;  // exact common value of ||A_i||_{S_inf}
};

// Rank-one resolution of the identity: whitened Gaussian frame vectors u_i
// with sum u_i u_i* = Id, rescaled so lambda is a probability vector. Every
// ||A_i||_{S_inf} equals d.
PsdDecomposition gen_psd_decomposition(std::uint64_t seed, int d, int n);

// Seeded Hermitian matrix (Gaussian entries, symmetrized).
DenseMatrix random_hermitian(SplitMix64& rng, int d, bool complex_entries);

// Seeded unitary matrix (Gram-Schmidt of a Gaussian matrix).
DenseMatrix random_unitary(SplitMix64& rng, int d, bool complex_entries);

}  // namespace nodim
