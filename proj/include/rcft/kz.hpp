#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace rcft {

using Complex = std::complex<double>;

/// n SU(2) spins at level k, with the classical invariant subspace of V_1 x ... x V_n.
///
/// Spins are given doubled (1 means spin 1/2). The invariant-space basis is the
/// eigenbasis of the exchange operator of legs 1 and 2, ordered by decreasing
/// eigenvalue, so each basis vector has a definite total spin for that pair.
class SpinSystem {
 public:
  SpinSystem(int level, std::vector<int> twice_spins);

  /// Four spin-1/2 legs.
  static SpinSystem four_doublets(int level) { return SpinSystem(level, {1, 1, 1, 1}); }

  int level() const { return level_; }
  const std::vector<int>& twice_spins() const { return twice_spins_; }
  std::size_t legs() const { return twice_spins_.size(); }
  /// Dimension of the invariant subspace.
  std::size_t dimension() const { return static_cast<std::size_t>(basis_.cols()); }
  /// Orthonormal invariant vectors as columns in the full tensor space.
  const Eigen::MatrixXd& basis() const { return basis_; }

  /// S_i . S_j on the full tensor space.
  Eigen::MatrixXd full_exchange(std::size_t i, std::size_t j) const;
  /// Permutation of legs i and j on the full tensor space; the spins must agree.
  Eigen::MatrixXd full_swap(std::size_t i, std::size_t j) const;

 private:
  int level_;
  std::vector<int> twice_spins_;
  std::vector<std::size_t> dims_;
  std::size_t full_dim_ = 1;
  Eigen::MatrixXd basis_;

  Eigen::MatrixXd leg_operator(std::size_t leg, const Eigen::MatrixXd& op) const;
};

/// Omega_ij restricted to the invariant subspace (0-based legs).
struct ExchangeOperator {
  std::size_t i = 0;
  std::size_t j = 0;
  Eigen::MatrixXd omega;
};

ExchangeOperator casimir_exchange(const SpinSystem& sys, std::size_t i, std::size_t j);

/// A path t in [0,1] -> (z_1(t), ..., z_n(t)) in configuration space.
///
/// `permutation` records how the endpoint relabels the start: z_i(1) = z_{perm[i]}(0).
/// It is the identity for loops and a transposition for a half-turn exchange.
class ConfigPath {
 public:
  using Config = std::vector<Complex>;
  struct Sample {
    Config z;
    Config dz;
  };

  ConfigPath(std::function<Sample(double)> at, std::vector<std::size_t> permutation,
             std::vector<double> breakpoints = {});

  /// z_i = i for i = 0..n-1.
  static Config default_base(std::size_t n);
  static ConfigPath constant(Config base);
  /// Legs i and j exchange places by a counterclockwise half-turn about their midpoint.
  static ConfigPath swap(Config base, std::size_t i, std::size_t j);
  /// Legs i and j rotate `turns` full turns about their midpoint.
  static ConfigPath loop(Config base, std::size_t i, std::size_t j, double turns = 1.0);
  /// Leg i walks toward leg j, circles it once at the given radius, and walks back.
  static ConfigPath encircle(Config base, std::size_t i, std::size_t j, double radius);
  /// Piecewise-linear path through configurations; the last must be a relabeling of the first.
  static ConfigPath polyline(std::vector<Config> samples);

  Sample at(double t) const { return at_(t); }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  std::size_t legs() const { return permutation_.size(); }
  /// Interior parameters where the velocity jumps; the integrator never steps across them.
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// This path, then `next` (whose start must equal this end).
  ConfigPath then(const ConfigPath& next) const;
  ConfigPath reversed() const;

 private:
  std::function<Sample(double)> at_;
  std::vector<std::size_t> permutation_;
  std::vector<double> breakpoints_;
};

struct KzOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::size_t max_steps = 1'000'000;
  /// Minimum pairwise distance along the path.
  double clearance = 1e-3;
};

/// Solution operator of dY/dt = (1/(k+2)) sum_{i<j} Omega_ij (dz_i - dz_j)/(z_i - z_j) Y, Y(0) = I.
/// Throws Error(Domain) on a clearance violation or step-size underflow, naming t.
Eigen::MatrixXcd kz_transport_matrix(const SpinSystem& sys, const ConfigPath& path,
                                     const KzOptions& options = {});

Eigen::VectorXcd kz_transport(const SpinSystem& sys, const ConfigPath& path,
                              const Eigen::VectorXcd& y0, const KzOptions& options = {});

/// P_perm * transport for a path that closes up to its leg permutation.
Eigen::MatrixXcd kz_monodromy(const SpinSystem& sys, const ConfigPath& path,
                              const KzOptions& options = {});

/// Smallest max-distance over matchings of two equal-size eigenvalue lists.
double match_eigenvalues(std::vector<Complex> a, std::vector<Complex> b);

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m);

struct DrinfeldKohnoReport {
  int level = 0;
  Eigen::MatrixXcd monodromy;
  std::vector<Complex> kz_eigenvalues;
  /// exp(2 pi i w / (k+2)) for the exchange eigenvalues w of Omega_23.
  std::vector<Complex> predicted;
  double exponent_residual = 0.0;
  /// Against eig(B) of the Ising braiding matrix; level 2 only.
  std::optional<double> braiding_residual;
  /// |det M - exp(2 pi i tr(Omega_23)/(k+2))|
  double determinant_residual = 0.0;
  /// Max difference between loop23 and two encircling loops of different radius.
  double homotopy_spread = 0.0;
  double condition_number = 0.0;
};

/// Spectral comparison of the loop23 monodromy with the quantum-group prediction, k >= 2.
DrinfeldKohnoReport drinfeld_kohno_check(int level, const KzOptions& options = {});

}  // namespace rcft
