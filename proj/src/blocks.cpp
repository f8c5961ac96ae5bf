#include "rcft/blocks.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rcft/error.hpp"

namespace rcft {

namespace {

constexpr std::size_t kMaxSteps = 10'000'000;
constexpr double kClosedTolerance = 1e-12;

Complex polar_sqrt(double modulus, double arg) { return std::polar(std::sqrt(modulus), 0.5 * arg); }

BlockPair assemble(const BranchState& st) {
  const Complex s = st.inner_root();
  const double den_mod = std::pow(std::abs(st.w) * std::abs(1.0 - st.w), 0.125);
  const Complex den = std::polar(den_mod, (st.arg_w + st.arg_one_minus_w) / 8.0);
  return {polar_sqrt(std::abs(1.0 + s), st.arg_plus) / den,
          polar_sqrt(std::abs(1.0 - s), st.arg_minus) / den};
}

std::string describe(Complex w) {
  std::ostringstream os;
  os << w.real() << (w.imag() < 0 ? "" : "+") << w.imag() << "i";
  return os.str();
}

Complex point_on(const PathSegment& seg, Complex from, double u) {
  if (seg.kind == PathSegment::Kind::Line) return from + u * (seg.point - from);
  return seg.point + (from - seg.point) * std::polar(1.0, seg.angle * u);
}

}  // namespace

BranchState BranchState::principal(Complex w) {
  BranchState st;
  st.w = w;
  st.arg_w = std::arg(w);
  st.arg_one_minus_w = std::arg(1.0 - w);
  const Complex s = st.inner_root();
  st.arg_plus = std::arg(1.0 + s);
  st.arg_minus = std::arg(1.0 - s);
  return st;
}

Complex BranchState::inner_root() const {
  return polar_sqrt(std::abs(1.0 - w), arg_one_minus_w);
}

BlockPair BranchState::values() const { return assemble(*this); }

BlockPair blocks_at(Complex w) {
  if (w == 0.0 || w == 1.0) {
    fail(ErrorCode::Domain, "blocks are singular at w = " + describe(w));
  }
  return BranchState::principal(w).values();
}

PathSpec PathSpec::circle(Complex center, double radius, double turns) {
  const Complex toward = Complex(0.5, 0.0) - center;
  const Complex direction = std::abs(toward) > 0.0 ? toward / std::abs(toward) : Complex(1.0, 0.0);
  return {center + radius * direction, {PathSegment::arc(center, 2.0 * std::numbers::pi * turns)}};
}

Complex PathSpec::end() const {
  Complex p = start;
  for (const auto& seg : segments) p = point_on(seg, p, 1.0);
  return p;
}

PathSpec PathSpec::then(const PathSpec& next) const {
  if (std::abs(end() - next.start) > kClosedTolerance) {
    fail(ErrorCode::InvalidArgument, "paths do not join: " + describe(end()) + " vs " +
                                         describe(next.start));
  }
  PathSpec out = *this;
  out.segments.insert(out.segments.end(), next.segments.begin(), next.segments.end());
  return out;
}

PathSpec PathSpec::reversed() const {
  std::vector<Complex> starts{start};
  for (const auto& seg : segments) starts.push_back(point_on(seg, starts.back(), 1.0));
  PathSpec out{starts.back(), {}};
  for (std::size_t i = segments.size(); i-- > 0;) {
    const auto& seg = segments[i];
    out.segments.push_back(seg.kind == PathSegment::Kind::Line ? PathSegment::line(starts[i])
                                                               : PathSegment::arc(seg.point, -seg.angle));
  }
  return out;
}

MonodromyResult continue_along(const PathSpec& path, const ContinuationOptions& options) {
  auto check_clearance = [&](Complex w) {
    if (std::abs(w) < options.clearance || std::abs(1.0 - w) < options.clearance) {
      fail(ErrorCode::Domain, "path comes within " + std::to_string(options.clearance) +
                                  " of a singular point at w = " + describe(w));
    }
  };
  check_clearance(path.start);

  MonodromyResult result;
  result.start = BranchState::principal(path.start);
  BranchState st = result.start;
  Complex from = path.start;

  for (const auto& seg : path.segments) {
    double u = 0.0;
    double h = 1.0 / 64.0;
    while (u < 1.0) {
      if (result.steps >= kMaxSteps) fail(ErrorCode::Limit, "continuation step limit reached");
      const double u_next = std::min(1.0, u + h);
      const Complex w_next = u_next == 1.0 ? point_on(seg, from, 1.0) : point_on(seg, from, u_next);
      if (w_next == 0.0 || w_next == 1.0) check_clearance(w_next);

      BranchState next = st;
      next.w = w_next;
      const double dw = std::arg(w_next / st.w);
      const double d1 = std::arg((1.0 - w_next) / (1.0 - st.w));
      next.arg_w += dw;
      next.arg_one_minus_w += d1;
      const Complex s_old = st.inner_root();
      const Complex s_new = next.inner_root();
      const double dp = std::arg((1.0 + s_new) / (1.0 + s_old));
      const double dm = std::arg((1.0 - s_new) / (1.0 - s_old));
      const double largest = std::max({std::abs(dw), std::abs(d1), std::abs(dp), std::abs(dm)});
      if (largest > options.max_arg_step) {
        h *= 0.5;
        if (h < 1e-14) fail(ErrorCode::Domain, "step size underflow near w = " + describe(st.w));
        continue;
      }
      check_clearance(w_next);
      next.arg_plus += dp;
      next.arg_minus += dm;
      st = next;
      u = u_next;
      ++result.steps;
      if (largest < 0.25 * options.max_arg_step) h = std::min(0.25, 2.0 * h);
    }
    from = point_on(seg, from, 1.0);
  }
  result.end = st;
  result.closed = std::abs(st.w - path.start) < kClosedTolerance;

  // The sheet structure is monomial: sqrt(1-w) either returns or flips sign.
  const BranchState reference = BranchState::principal(st.w);
  const BlockPair here = st.values();
  const BlockPair ref = reference.values();
  const bool flipped = std::abs(st.inner_root() + reference.inner_root()) <
                       std::abs(st.inner_root() - reference.inner_root());
  result.matrix.setZero();
  if (flipped) {
    result.matrix(0, 1) = here.f1 / ref.f2;
    result.matrix(1, 0) = here.f2 / ref.f1;
  } else {
    result.matrix(0, 0) = here.f1 / ref.f1;
    result.matrix(1, 1) = here.f2 / ref.f2;
  }
  return result;
}

double verify_fusing(std::span<const double> samples) {
  const double r = 1.0 / std::numbers::sqrt2;
  double residual = 0.0;
  for (double w : samples) {
    if (!(w > 0.0 && w < 1.0)) fail(ErrorCode::InvalidArgument, "fusing samples must lie in (0,1)");
    const BlockPair a = blocks_at(w);
    const BlockPair b = blocks_at(1.0 - w);
    residual = std::max(residual, std::abs(a.f1 - r * (b.f1 + b.f2)));
    residual = std::max(residual, std::abs(a.f2 - r * (b.f1 - b.f2)));
  }
  return residual;
}

PuiseuxSeries modular_lambda(const Rational& cutoff) {
  // theta_2 = sum q^{(n+1/2)^2/2}, theta_3 = sum q^{n^2/2}
  PuiseuxSeries theta2(cutoff + 1);
  PuiseuxSeries theta3(cutoff + 1);
  const auto reach = static_cast<std::int64_t>(std::sqrt(2.0 * to_double(cutoff + 1))) + 2;
  for (std::int64_t n = -reach; n <= reach; ++n) {
    theta2.add_term(Rational((2 * n + 1) * (2 * n + 1), 8), 1);
    theta3.add_term(Rational(n * n, 2), 1);
  }
  const PuiseuxSeries t2sq = theta2 * theta2;
  const PuiseuxSeries t3sq = theta3 * theta3;
  return ((t2sq * t2sq) * series_inverse(t3sq * t3sq)).truncated(cutoff);
}

std::pair<PuiseuxSeries, PuiseuxSeries> lift_to_tau(const Rational& cutoff) {
  if (cutoff <= Rational(3)) fail(ErrorCode::InvalidArgument, "lift_to_tau needs cutoff > 3");
  const Rational working = cutoff + 1;
  const PuiseuxSeries lambda = modular_lambda(working);
  const PuiseuxSeries one = PuiseuxSeries::constant(1, lambda.cutoff());
  const PuiseuxSeries inner = series_sqrt(one - lambda);  // sqrt(1 - w)

  // Leading constants: sqrt(1+s) = sqrt2 sqrt((1+s)/2), sqrt(1-s) = 2 sqrt2 sqrt((1-s)/8),
  // (w(1-w))^{-1/8} = 2^{-1/2} (w/16)^{-1/8} (1-w)^{-1/8}; the square roots of 2 cancel.
  const PuiseuxSeries plus = series_sqrt((one + inner).scaled(Coefficient(1, 2)));
  const PuiseuxSeries minus = series_sqrt((one - inner).scaled(Coefficient(1, 8)));
  const PuiseuxSeries prefactor = series_power(lambda.scaled(Coefficient(1, 16)), Rational(-1, 8)) *
                                  series_power(one - lambda, Rational(-1, 8));

  PuiseuxSeries f1 = prefactor * plus;
  PuiseuxSeries f2 = (prefactor * minus).scaled(2);
  if (f1.cutoff() < cutoff || f2.cutoff() < cutoff) {
    fail(ErrorCode::Internal, "lift lost precision below the requested cutoff");
  }
  return {f1.truncated(cutoff), f2.truncated(cutoff)};
}

}  // namespace rcft
