#pragma once

#include <span>
#include <vector>

#include "nodim/caratheodory.hpp"
#include "nodim/report.hpp"

namespace nodim {

// n signals sampled on a finite probability space with N atoms, values in
// [-1, 1]. `values[i][w]` is signal i at atom w.
struct FiniteSignalEnsemble {
  int n = 0;
  int omega_size = 0;
  std::vector<double> mu;                   // probability weights, N entries
  std::vector<std::vector<double>> values;  // n rows of N entries
};

void validate_ensemble(const FiniteSignalEnsemble& ensemble);

// Position of the unordered pair {i, j}, i < j, in the flattened distance
// vector of length n(n-1)/2 (lexicographic order).
int pair_index(int n, int i, int j);

// Mu-weighted squared distances sum_w mu(w) |f_i(w) - f_j(w)|^2, entries in
// [0, 4].
std::vector<double> pairwise_sq_distances(const FiniteSignalEnsemble& ensemble);

// Cloud of per-atom distance snapshots v(w)_{i,j} = |f_i(w) - f_j(w)|^2 in
// the substituted space l_p^D, p = max(ln D, 2), D = n(n-1)/2. Its weighted
// barycenter is pairwise_sq_distances(ensemble); the centered cloud has
// radius at most 4e.
PointCloud build_distance_cloud(const FiniteSignalEnsemble& ensemble);

struct Sketch {
  std::vector<int> sample_atoms;  // atom indices, repetition allowed
  int k = 0;
  int dimension = 0;           // D = n(n-1)/2
  double derived_bound = 0.0;  // B(k) = 4e * 21 sqrt((p-1)/k)
};

// Selects k atoms by running the greedy solver on the distance cloud.
Sketch greedy_sketch(const FiniteSignalEnsemble& ensemble, int k);

// Fingerprint of one signal: (f_i(w_1), ..., f_i(w_k)) / sqrt(k).
std::vector<double> encode(const FiniteSignalEnsemble& ensemble,
                           const Sketch& sketch, int signal_index);

// Squared euclidean distance of two fingerprints.
double decode(std::span<const double> u, std::span<const double> v);

// Max over pairs of |decode(enc i, enc j) - D(i, j)|, passed against the
// sketch's derived bound.
VerificationReport verify_sketch(const FiniteSignalEnsemble& ensemble,
                                 const Sketch& sketch);

}  // namespace nodim
