#include "rcft/characters.hpp"

#include <cmath>
#include <sstream>

#include "rcft/error.hpp"

namespace rcft {

namespace {

// prod_{n >= 1} (1 + sign q^{n - offset}) up to the cutoff.
PuiseuxSeries product_series(const Rational& offset, int sign, const Rational& cutoff) {
  PuiseuxSeries acc = PuiseuxSeries::constant(1, cutoff);
  for (std::int64_t n = 1;; ++n) {
    const Rational e = Rational(n) - offset;
    if (e >= cutoff) break;
    PuiseuxSeries factor = PuiseuxSeries::constant(1, cutoff);
    factor.add_term(e, sign);
    acc = acc * factor;
  }
  return acc;
}

// sum_{n in Z} (base + n period) q^{(base + n period)^2 / denom}
PuiseuxSeries theta_like(std::int64_t base, std::int64_t period, std::int64_t denom,
                         const Rational& cutoff) {
  PuiseuxSeries out(cutoff);
  const double limit = std::sqrt(std::max(0.0, to_double(cutoff) * static_cast<double>(denom)));
  const auto reach = static_cast<std::int64_t>(limit / static_cast<double>(period)) + 2;
  for (std::int64_t n = -reach; n <= reach; ++n) {
    const std::int64_t m = base + n * period;
    out.add_term(Rational(m * m, denom), Coefficient(static_cast<long>(m)));
  }
  return out;
}

}  // namespace

std::vector<PuiseuxSeries> ising_characters(const Rational& cutoff) {
  const Rational shift(-1, 48);
  const Rational inner = cutoff - shift;
  const PuiseuxSeries plus = product_series(Rational(1, 2), 1, inner);
  const PuiseuxSeries minus = product_series(Rational(1, 2), -1, inner);
  const Coefficient half(1, 2);
  PuiseuxSeries vacuum = (plus + minus).scaled(half).shifted(shift);
  PuiseuxSeries epsilon = (plus - minus).scaled(half).shifted(shift);
  PuiseuxSeries sigma = product_series(Rational(0), 1, cutoff - Rational(1, 24)).shifted(Rational(1, 24));
  return {vacuum.truncated(cutoff), epsilon.truncated(cutoff), sigma.truncated(cutoff)};
}

std::vector<PuiseuxSeries> su2_characters(int k, const Rational& cutoff) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "SU(2) level must be nonnegative");
  const Rational denominator_lead(1, 8);
  const PuiseuxSeries denominator = theta_like(1, 4, 8, cutoff + 2 * denominator_lead);
  const PuiseuxSeries inverse = series_inverse(denominator);
  std::vector<PuiseuxSeries> chars;
  for (int a = 0; a <= k; ++a) {
    const PuiseuxSeries numerator =
        theta_like(a + 1, 2 * (k + 2), 4 * (k + 2), cutoff + denominator_lead);
    PuiseuxSeries chi = (numerator * inverse).truncated(cutoff);
    if (chi.cutoff() != cutoff) {
      fail(ErrorCode::Internal, "SU(2) character lost precision below the requested cutoff");
    }
    for (const auto& [e, c] : chi.terms()) {
      if (c.get_den() != 1 || c < 0) {
        std::ostringstream os;
        os << "SU(2)_" << k << " character " << a << " has coefficient " << c.get_str()
           << " at q^" << format_rational(e);
        fail(ErrorCode::Internal, os.str());
      }
    }
    chars.push_back(std::move(chi));
  }
  return chars;
}

std::vector<std::complex<double>> evaluate_all(const std::vector<PuiseuxSeries>& chars,
                                               std::complex<double> tau, double tol) {
  std::vector<std::complex<double>> values;
  values.reserve(chars.size());
  for (const auto& chi : chars) {
    const Evaluation e = evaluate(chi, tau);
    if (!(e.truncation_bound < tol)) {
      std::ostringstream os;
      os << "truncation estimate " << e.truncation_bound << " at tau = " << tau.real() << "+"
         << tau.imag() << "i exceeds tolerance " << tol << "; increase cutoff";
      fail(ErrorCode::Limit, os.str());
    }
    values.push_back(e.value);
  }
  return values;
}

double check_modular_transform(const ModularData& md, const std::vector<PuiseuxSeries>& chars,
                               std::complex<double> tau, Transform which, double tol) {
  if (chars.size() != md.size()) {
    fail(ErrorCode::InvalidArgument, "character count does not match the label count");
  }
  if (!(tau.imag() > 0.0)) fail(ErrorCode::Domain, "evaluation point must have Im(tau) > 0");
  const std::complex<double> image =
      which == Transform::S ? -1.0 / tau : tau + std::complex<double>(1.0, 0.0);
  const auto here = evaluate_all(chars, tau, tol);
  const auto there = evaluate_all(chars, image, tol);
  const auto n = static_cast<Eigen::Index>(md.size());
  double residual = 0.0;
  for (Eigen::Index m = 0; m < n; ++m) {
    std::complex<double> rhs = 0.0;
    if (which == Transform::S) {
      for (Eigen::Index j = 0; j < n; ++j) rhs += md.s()(m, j) * here[static_cast<std::size_t>(j)];
    } else {
      rhs = md.t()(m) * here[static_cast<std::size_t>(m)];
    }
    residual = std::max(residual, std::abs(there[static_cast<std::size_t>(m)] - rhs));
  }
  return residual;
}

}  // namespace rcft
