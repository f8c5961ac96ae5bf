#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rcft/series.hpp"

namespace rcft {

using Complex = std::complex<double>;

/// The two sigma-sigma-sigma-sigma blocks (F1, F2) at cross-ratio w.
struct BlockPair {
  Complex f1;
  Complex f2;
};

/// Principal-branch blocks
///   F1 = sqrt(1 + sqrt(1-w)) / (w(1-w))^{1/8},  F2 = sqrt(1 - sqrt(1-w)) / (w(1-w))^{1/8}.
/// Throws Error(Domain) at w = 0 or w = 1.
BlockPair blocks_at(Complex w);

/// Continuous arguments of the four multivalued factors of the blocks.
struct BranchState {
  Complex w;
  double arg_w = 0.0;            // arg w, for w^{1/8}
  double arg_one_minus_w = 0.0;  // arg(1-w), for (1-w)^{1/8} and sqrt(1-w)
  double arg_plus = 0.0;         // arg(1 + sqrt(1-w))
  double arg_minus = 0.0;        // arg(1 - sqrt(1-w))

  /// Principal arguments at w.
  static BranchState principal(Complex w);
  /// sqrt(1-w) on the tracked branch.
  Complex inner_root() const;
  /// Block values rebuilt from the stored arguments.
  BlockPair values() const;
};

struct PathSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  /// Line: end point. Arc: center.
  Complex point;
  /// Arc only: signed sweep in radians (positive is counterclockwise).
  double angle = 0.0;

  static PathSegment line(Complex to) { return {Kind::Line, to, 0.0}; }
  static PathSegment arc(Complex center, double angle) { return {Kind::Arc, center, angle}; }
};

struct PathSpec {
  Complex start;
  std::vector<PathSegment> segments;

  /// Circle about `center` of the given radius, swept `turns` times counterclockwise
  /// (clockwise for negative turns). It starts at the point of the circle nearest the
  /// reference basepoint w = 1/2, so loops about 0 and 1 are based on (0,1).
  static PathSpec circle(Complex center, double radius, double turns = 1.0);

  Complex end() const;
  /// This path followed by `next`, which must start where this one ends.
  PathSpec then(const PathSpec& next) const;
  /// The same curve traversed backwards.
  PathSpec reversed() const;
};

struct ContinuationOptions {
  /// Minimum distance to the singular points 0 and 1.
  double clearance = 1e-3;
  /// Largest change of any tracked argument per step.
  double max_arg_step = 0.7853981633974483;  // pi/4
};

struct MonodromyResult {
  /// (F continued to the end) = matrix * (principal F at the end). For a closed
  /// path based at a point of (0,1) this is the monodromy matrix, and following
  /// a then b gives matrix(a) * matrix(b).
  Eigen::Matrix2cd matrix;
  bool closed = false;
  BranchState start;
  BranchState end;
  std::size_t steps = 0;
};

/// Analytic continuation of the blocks along a path, starting from principal branches.
/// Throws Error(Domain) with the offending point if the path comes within
/// the clearance of 0 or 1.
MonodromyResult continue_along(const PathSpec& path, const ContinuationOptions& options = {});

/// max over samples of |F_i(w) - sum_j F_ij F_j(1-w)| with F = [[1,1],[1,-1]]/sqrt2.
double verify_fusing(std::span<const double> samples);

/// The blocks as q-series in tau via w = theta_2^4 / theta_3^4, both truncated at cutoff.
std::pair<PuiseuxSeries, PuiseuxSeries> lift_to_tau(const Rational& cutoff = Rational(50));

/// The modular lambda function theta_2^4 / theta_3^4 as a q-series.
PuiseuxSeries modular_lambda(const Rational& cutoff);

}  // namespace rcft
