#pragma once

#include <complex>
#include <vector>

#include "rcft/modular_data.hpp"
#include "rcft/series.hpp"

namespace rcft {

inline const Rational kDefaultCutoff{50};

/// Ising characters (vacuum, epsilon, sigma) from the free-fermion products.
std::vector<PuiseuxSeries> ising_characters(const Rational& cutoff = kDefaultCutoff);

/// Specialized SU(2)_k characters, theta-function numerator over sum (4n+1) q^{(4n+1)^2/8}.
/// Throws Error(Internal) if a quotient has a coefficient that is not a nonnegative integer.
std::vector<PuiseuxSeries> su2_characters(int k, const Rational& cutoff = kDefaultCutoff);

enum class Transform { S, T };

/// Max over labels of |chi_M(g tau) - sum_N X_MN chi_N(tau)| for X = S or T.
/// Throws Error(Limit) ("increase cutoff") when the truncation estimate at either
/// evaluation point is not below tol.
double check_modular_transform(const ModularData& md, const std::vector<PuiseuxSeries>& chars,
                               std::complex<double> tau, Transform which, double tol = 1e-6);

/// Evaluates every character at tau, refusing when a truncation estimate reaches tol.
std::vector<std::complex<double>> evaluate_all(const std::vector<PuiseuxSeries>& chars,
                                               std::complex<double> tau, double tol);

}  // namespace rcft
