#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rcft/modular_data.hpp"

namespace rcft {

/// Fusing, twist and braiding matrices of the four-sigma Ising blocks.
struct DualityData {
  Eigen::Matrix2cd f;
  Eigen::Matrix2cd d;
  Eigen::Matrix2cd b;
};

/// Generators are numbered from 1 in words; a negative entry means the inverse.
using Word = std::vector<int>;

/// lhs = scalar * rhs. When `expected` is set the scalar must equal it.
struct Relation {
  std::string name;
  Word lhs;
  Word rhs;
  std::optional<Complex> expected;
};

struct MCGRep {
  std::string name;
  std::vector<std::string> generator_names;
  std::vector<Eigen::MatrixXcd> generators;
  std::vector<Relation> relations;

  std::size_t dimension() const;
  Eigen::MatrixXcd evaluate(const Word& word) const;
};

struct RelationCheck {
  std::string name;
  /// Best scalar c with lhs ~ c * rhs.
  Complex scalar;
  /// max |lhs - c rhs|
  double projective_residual = 0.0;
  /// | |c| - 1 |
  double unimodular_residual = 0.0;
  /// max |lhs - expected * rhs|, when an expected scalar is given.
  std::optional<double> exact_residual;
  bool pass = false;
};

std::vector<RelationCheck> check_relations(const MCGRep& rep, double tol);

/// Largest deviation of a generator from unitarity.
double unitarity_residual(const MCGRep& rep);

/// S, T with the relations S^4 = I, (ST)^3 = S^2, S^2 T = T S^2, required to hold exactly.
/// Throws Error(Validation) when a relation residual reaches 1e-8.
MCGRep sl2z_rep(const ModularData& md);

DualityData ising_duality_data();

/// sigma_1 -> D, sigma_2 -> B, sigma_3 -> D with braid, commutation and sphere relations.
MCGRep ising_braid_rep();

/// Divides by the phase of the first entry with modulus above tol.
Eigen::MatrixXcd normalize_phase(const Eigen::MatrixXcd& m, double tol = 1e-8);

struct ClosureResult {
  bool finite = false;
  /// Group order when finite, otherwise the number of elements found before stopping.
  std::size_t elements = 0;
};

/// Breadth-first closure of the group generated by `rep` modulo global phase.
ClosureResult projective_image_closure(const MCGRep& rep, std::size_t max_elems,
                                       double tol = 1e-8);

}  // namespace rcft
