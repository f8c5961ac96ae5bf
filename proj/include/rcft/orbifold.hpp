#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rcft/mcg_reps.hpp"

namespace rcft {

/// A finite group given by its multiplication table on element ids 0..m-1.
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and (exhaustively up to order 24, sampled above) associativity.
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  /// trivial, Z2, Z3, Z4, Z2xZ2, S3, D4, Q8, A4
  static FiniteGroup builtin(const std::string& name);
  static std::vector<std::string> builtin_names();
  /// First line m, then m rows of m space-separated ids.
  static FiniteGroup load(const std::string& path);
  static FiniteGroup parse(const std::string& name, const std::string& text);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, long long n) const;
  /// a b a^-1 b^-1
  int commutator(int a, int b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }
  /// h^-1 a h
  int conjugate(int a, int h) const { return mul(mul(inv(h), a), h); }
  bool is_abelian() const;
  std::size_t conjugacy_class_count() const;
  /// Character degrees of a built-in group; empty for loaded tables.
  const std::vector<int>& character_degrees() const { return degrees_; }

 private:
  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> degrees_;
};

/// (a_1, b_1, ..., a_g, b_g) with prod [a_i, b_i] = e.
using FlatTuple = std::vector<int>;

struct FlatClass {
  FlatTuple representative;
  std::size_t orbit_size = 0;
};

inline constexpr double kFlatBudget = 1e8;

/// All flat tuples in lexicographic order; refuses when |G|^{2g} exceeds the budget.
std::vector<FlatTuple> enumerate_flat(const FiniteGroup& group, int genus, double budget = kFlatBudget);

bool is_flat(const FiniteGroup& group, const FlatTuple& tuple);

/// Lexicographically least tuple in the simultaneous-conjugation orbit.
FlatTuple canonical_form(const FiniteGroup& group, const FlatTuple& tuple);

/// Orbits ordered by representative.
std::vector<FlatClass> conjugation_classes(const FiniteGroup& group, const std::vector<FlatTuple>& tuples);

/// |G|^{2g-1} sum_chi chi(1)^{2-2g}, exact. Throws Error(Validation) on an invalid degree list.
mpz_class mednykh_count(const FiniteGroup& group, int genus, const std::vector<int>& degrees);

/// Sum over conjugacy classes of the class count of the centralizer of a representative.
std::size_t centralizer_pair_count(const FiniteGroup& group);

/// SL(2,Z) matrix [[p, q], [r, s]] acting on a commuting pair by (a, b) -> (a^p b^r, a^q b^s).
using SL2Matrix = std::array<long long, 4>;
std::array<int, 2> exponent_action(const FiniteGroup& group, const SL2Matrix& m, int a, int b);

/// Class i goes to class perm[i].
using Permutation = std::vector<std::size_t>;

struct PermutationRelation {
  std::string name;
  bool holds = false;
};

struct TorusAction {
  std::vector<FlatClass> classes;
  /// (a, b) -> (b, a^-1)
  Permutation s;
  /// (a, b) -> (a, ab)
  Permutation t;
  /// (a, b) -> (a^-1, b^-1)
  Permutation inversion;
  std::vector<PermutationRelation> relations;

  bool relations_hold() const;
  /// Permutation matrices with P(perm[i], i) = 1.
  MCGRep to_mcg_rep() const;
};

/// Acts on genus-one classes; throws Error(Internal) if the action does not descend to classes.
TorusAction torus_sl2z_action(const FiniteGroup& group);

/// p after q: (p o q)[i] = p[q[i]].
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace rcft
