#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "rcft/rational.hpp"

namespace rcft {

using Coefficient = mpq_class;

/// Truncated series sum_e c_e q^e with exact rational exponents and coefficients.
///
/// Every exponent stored is strictly below the cutoff; the terms at or beyond the
/// cutoff are unknown, not zero. Arithmetic propagates cutoffs so that every term of
/// a result is exact.
class PuiseuxSeries {
 public:
  using Terms = std::map<Rational, Coefficient>;

  explicit PuiseuxSeries(Rational cutoff) : cutoff_(cutoff) {}

  static PuiseuxSeries monomial(Coefficient c, Rational exponent, Rational cutoff);
  static PuiseuxSeries constant(Coefficient c, Rational cutoff) {
    return monomial(std::move(c), Rational(0), cutoff);
  }

  /// Adds c q^e; ignored when e is at or beyond the cutoff.
  void add_term(const Rational& exponent, const Coefficient& c);

  const Terms& terms() const { return terms_; }
  const Rational& cutoff() const { return cutoff_; }
  bool empty() const { return terms_.empty(); }
  std::optional<Rational> leading_exponent() const;
  /// Coefficient of q^e (zero when absent).
  Coefficient coefficient(const Rational& exponent) const;

  /// Multiplies by q^shift; the cutoff moves with the terms.
  PuiseuxSeries shifted(const Rational& shift) const;
  PuiseuxSeries scaled(const Coefficient& factor) const;
  /// Drops terms at or beyond a lower cutoff.
  PuiseuxSeries truncated(const Rational& cutoff) const;

  PuiseuxSeries operator-() const { return scaled(Coefficient(-1)); }

  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

  bool operator==(const PuiseuxSeries& other) const {
    return cutoff_ == other.cutoff_ && terms_ == other.terms_;
  }

 private:
  Terms terms_;
  Rational cutoff_;
};

enum class SeriesOp { Add, Mul };

PuiseuxSeries series_arith(const PuiseuxSeries& a, const PuiseuxSeries& b, SeriesOp op);

/// a^r for rational r. The leading coefficient must have an exact rational r-th power.
/// Throws Error(Domain) for an empty series or a leading coefficient without an exact root.
PuiseuxSeries series_power(const PuiseuxSeries& a, const Rational& r);

/// Square root with positive leading coefficient.
PuiseuxSeries series_sqrt(const PuiseuxSeries& a);

PuiseuxSeries series_inverse(const PuiseuxSeries& a);
PuiseuxSeries series_divide(const PuiseuxSeries& a, const PuiseuxSeries& b);

struct Evaluation {
  std::complex<double> value;
  /// Estimated size of the dropped tail.
  double truncation_bound = 0.0;
};

/// Evaluates at q = exp(2 pi i tau); requires Im(tau) > 0.
Evaluation evaluate(const PuiseuxSeries& s, std::complex<double> tau);

/// Multi-line "p/q  c" listing, one term per line.
std::string to_listing(const PuiseuxSeries& s);

}  // namespace rcft
