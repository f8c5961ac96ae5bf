#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "rcft/modular_data.hpp"
#include "rcft/series.hpp"

namespace rcft {

/// Nonnegative integer matrix commuting with S and T, normalized at the vacuum.
struct InvariantMatrix {
  Eigen::MatrixXi z;
  /// max(|ZS - SZ|, |ZT - TZ|)
  double residual = 0.0;
};

/// Real basis of {Z : ZS = SZ, ZT = TZ} in reduced row-echelon form: basis matrix j
/// has a 1 at its pivot entry and every other basis matrix has 0 there. Entries within
/// 1e-9 of a small-denominator rational are snapped to it.
std::vector<Eigen::MatrixXd> commutant_basis(const ModularData& md);

struct InvariantSearchOptions {
  /// Added to every entry bound ceil(d_a d_b).
  int bound_slack = 0;
  std::uint64_t max_candidates = 10'000'000;
};

/// Exhaustive search for modular invariants with Z_ab <= ceil(d_a d_b) (+ slack).
/// Throws Error(Limit) with the candidate count when it exceeds max_candidates.
std::vector<InvariantMatrix> enumerate_invariants(const ModularData& md,
                                                  const InvariantSearchOptions& options = {});

/// sum_{M,N} Z_MN chi_M(tau) conj(chi_N(tau)).
std::complex<double> partition_function(const ModularData& md, const InvariantMatrix& z,
                                        const std::vector<PuiseuxSeries>& chars,
                                        std::complex<double> tau, double tol = 1e-6);

/// Commutation residual of an arbitrary integer matrix.
double commutation_residual(const ModularData& md, const Eigen::MatrixXi& z);

}  // namespace rcft
