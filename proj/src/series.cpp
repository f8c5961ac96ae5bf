#include "rcft/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

#include "rcft/error.hpp"

namespace rcft {

namespace {

// Leading exponent, or the cutoff for a series with no known nonzero terms.
Rational effective_lead(const PuiseuxSeries& s) {
  auto lead = s.leading_exponent();
  return lead ? *lead : s.cutoff();
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  // gcd(p/q, r/s) = gcd(p s, r q) / (q s)
  const std::int64_t num = std::gcd(a.numerator() * b.denominator(), b.numerator() * a.denominator());
  return Rational(num, a.denominator() * b.denominator());
}

mpz_class exact_root(const mpz_class& x, unsigned long degree, bool& ok) {
  mpz_class root;
  ok = mpz_root(root.get_mpz_t(), x.get_mpz_t(), degree) != 0;
  return root;
}

Coefficient rational_power(const Coefficient& a, const Rational& r) {
  const auto p = r.numerator();
  const auto q = static_cast<unsigned long>(r.denominator());
  if (a == 0) fail(ErrorCode::Domain, "zero leading coefficient");
  mpz_class num = a.get_num();
  mpz_class den = a.get_den();
  if (q > 1) {
    if (num < 0 && q % 2 == 0) {
      fail(ErrorCode::Domain, "negative leading coefficient has no real root of even degree");
    }
    bool ok_num = false;
    bool ok_den = false;
    mpz_class rnum = exact_root(num, q, ok_num);
    mpz_class rden = exact_root(den, q, ok_den);
    if (!ok_num || !ok_den) {
      fail(ErrorCode::Domain, "leading coefficient " + a.get_str() + " has no exact rational root of degree " +
                                  std::to_string(q));
    }
    num = rnum;
    den = rden;
  }
  Coefficient base(num, den);
  base.canonicalize();
  if (p < 0) base = Coefficient(1) / base;
  Coefficient out(1);
  for (std::int64_t i = 0; i < (p < 0 ? -p : p); ++i) out *= base;
  return out;
}

}  // namespace

PuiseuxSeries PuiseuxSeries::monomial(Coefficient c, Rational exponent, Rational cutoff) {
  PuiseuxSeries s(cutoff);
  s.add_term(exponent, c);
  return s;
}

void PuiseuxSeries::add_term(const Rational& exponent, const Coefficient& c) {
  if (exponent >= cutoff_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Rational> PuiseuxSeries::leading_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Coefficient PuiseuxSeries::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rational& shift) const {
  PuiseuxSeries out(cutoff_ + shift);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

PuiseuxSeries PuiseuxSeries::scaled(const Coefficient& factor) const {
  PuiseuxSeries out(cutoff_);
  if (factor == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& cutoff) const {
  PuiseuxSeries out(std::min(cutoff, cutoff_));
  for (const auto& [e, c] : terms_) {
    if (e >= out.cutoff_) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries out(std::min(a.cutoff_, b.cutoff_));
  for (const auto& [e, c] : a.terms_) out.add_term(e, c);
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  PuiseuxSeries out(std::min(a.cutoff_ + effective_lead(b), b.cutoff_ + effective_lead(a)));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      const Rational e = ea + eb;
      if (e >= out.cutoff_) break;
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PuiseuxSeries series_arith(const PuiseuxSeries& a, const PuiseuxSeries& b, SeriesOp op) {
  return op == SeriesOp::Add ? a + b : a * b;
}

PuiseuxSeries series_power(const PuiseuxSeries& a, const Rational& r) {
  if (a.empty()) fail(ErrorCode::Domain, "power of a series with no known terms");
  const Rational lead = *a.leading_exponent();
  const Rational span = a.cutoff() - lead;

  // Lay the series out on the grid lead + j * step.
  std::optional<Rational> grid;
  for (const auto& [e, c] : a.terms()) {
    if (e != lead) grid = grid ? rational_gcd(*grid, e - lead) : e - lead;
  }
  const Rational step = grid ? *grid : span;
  const std::int64_t count = [&] {
    const Rational n = span / step;
    return n.numerator() / n.denominator() + (n.numerator() % n.denominator() != 0 ? 1 : 0);
  }();
  std::vector<Coefficient> x(static_cast<std::size_t>(count));
  for (const auto& [e, c] : a.terms()) {
    const Rational j = (e - lead) / step;
    x[static_cast<std::size_t>(j.numerator())] = c;
  }

  // J.C.P. Miller recurrence for (sum x_j t^j)^r.
  const Coefficient rq(mpz_class(static_cast<long>(r.numerator())),
                       mpz_class(static_cast<long>(r.denominator())));
  std::vector<Coefficient> y(x.size());
  y[0] = rational_power(x[0], r);
  for (std::size_t n = 1; n < y.size(); ++n) {
    Coefficient acc(0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (x[k] == 0) continue;
      Coefficient w = (rq + 1) * static_cast<long>(k) - static_cast<long>(n);
      acc += w * x[k] * y[n - k];
    }
    y[n] = acc / (x[0] * static_cast<long>(n));
  }

  const Rational new_lead = r * lead;
  PuiseuxSeries out(new_lead + span);
  for (std::size_t j = 0; j < y.size(); ++j) {
    out.add_term(new_lead + step * static_cast<std::int64_t>(j), y[j]);
  }
  return out;
}

PuiseuxSeries series_sqrt(const PuiseuxSeries& a) { return series_power(a, Rational(1, 2)); }

PuiseuxSeries series_inverse(const PuiseuxSeries& a) { return series_power(a, Rational(-1)); }

PuiseuxSeries series_divide(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a * series_inverse(b);
}

Evaluation evaluate(const PuiseuxSeries& s, std::complex<double> tau) {
  if (!(tau.imag() > 0.0)) fail(ErrorCode::Domain, "evaluation point must have Im(tau) > 0");
  const std::complex<double> two_pi_i_tau = std::complex<double>(0.0, 2.0 * std::numbers::pi) * tau;
  Evaluation out{0.0, 0.0};
  double largest = 0.0;
  std::optional<Rational> step;
  std::optional<Rational> previous;
  for (const auto& [e, c] : s.terms()) {
    const double coeff = c.get_d();
    largest = std::max(largest, std::abs(coeff));
    out.value += coeff * std::exp(two_pi_i_tau * to_double(e));
    if (previous) step = step ? rational_gcd(*step, e - *previous) : e - *previous;
    previous = e;
  }
  const double log_q = -2.0 * std::numbers::pi * tau.imag();
  const double ratio = std::exp(log_q * (step ? to_double(*step) : 1.0));
  out.truncation_bound = std::max(largest, 1.0) * std::exp(log_q * to_double(s.cutoff())) / (1.0 - ratio);
  return out;
}

std::string to_listing(const PuiseuxSeries& s) {
  std::ostringstream os;
  for (const auto& [e, c] : s.terms()) os << format_rational(e) << "  " << c.get_str() << '\n';
  return os.str();
}

}  // namespace rcft
