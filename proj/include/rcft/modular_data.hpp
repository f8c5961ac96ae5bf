#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rcft/rational.hpp"

namespace rcft {

using Complex = std::complex<double>;

/// Default tolerance for the matrix identities of modular data.
inline constexpr double kValidationTolerance = 1e-9;

struct Label {
  std::size_t index = 0;
  std::string name;
  std::vector<std::string> aliases;
};

/// Modular data (S, T) together with the central charge and conformal weights.
///
/// T is never stored independently: its diagonal is recomputed from the exact
/// weights as exp(2 pi i (h - c/24)). The constructor only checks structure
/// (dimensions, vacuum index, unique names); use validate_modular_data() for the
/// algebraic relations.
class ModularData {
 public:
  ModularData(std::vector<Label> labels, std::size_t vacuum, Eigen::MatrixXcd s,
              Rational central_charge, std::vector<Rational> weights);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  std::size_t vacuum() const { return vacuum_; }
  const Eigen::MatrixXcd& s() const { return s_; }
  const Eigen::VectorXcd& t() const { return t_; }
  Eigen::MatrixXcd t_matrix() const { return t_.asDiagonal(); }
  const Rational& central_charge() const { return central_charge_; }
  const std::vector<Rational>& weights() const { return weights_; }

  /// Resolves a label by name, alias, or decimal index.
  std::optional<std::size_t> find(std::string_view name) const;
  /// As find(), but throws Error(InvalidArgument) for unknown names.
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<Label> labels_;
  std::size_t vacuum_;
  Eigen::MatrixXcd s_;
  Eigen::VectorXcd t_;
  Rational central_charge_;
  std::vector<Rational> weights_;
};

struct ValidationCheck {
  std::string name;
  double residual = 0.0;
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  double tolerance = kValidationTolerance;

  bool pass() const;
  double max_residual() const;
  /// First failing check, if any.
  const ValidationCheck* first_failure() const;
};

/// Runs the unitarity, symmetry, charge-conjugation, (ST)^3 = S^2 and T checks.
ValidationReport validate_modular_data(const ModularData& md,
                                       double tol = kValidationTolerance);

/// Throws Error(Validation) naming the first failing check.
void require_valid(const ModularData& md, double tol = kValidationTolerance);

/// Ising model data, labels in the order (vacuum, epsilon, sigma).
ModularData ising_modular_data();

/// SU(2) at level k with labels a = 0..k (twice the spin).
ModularData su2_modular_data(int k);

/// Permutation C with S^2 = C; throws Error(Validation) if S^2 is not a permutation matrix.
std::vector<std::size_t> charge_conjugation(const ModularData& md,
                                            double tol = kValidationTolerance);

}  // namespace rcft
