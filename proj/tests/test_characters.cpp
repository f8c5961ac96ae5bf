#include <cmath>
#include <vector>

#include "doctest.h"
#include "rcft/characters.hpp"
#include "rcft/error.hpp"

using namespace rcft;

namespace {

std::vector<long> coefficients_from(const PuiseuxSeries& s, Rational lead, Rational step, int count) {
  std::vector<long> out;
  for (int j = 0; j < count; ++j) out.push_back(mpz_class(s.coefficient(lead + step * j)).get_si());
  return out;
}

// Number of partitions of n into distinct parts drawn from `parts`.
long distinct_partitions(int n, const std::vector<int>& parts) {
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int p : parts) {
    for (int m = n; m >= p; --m) ways[static_cast<std::size_t>(m)] += ways[static_cast<std::size_t>(m - p)];
  }
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("ising characters count fermionic partitions") {
  // Doubling exponents, chi_V and chi_eps count partitions of 2n and 2n+1 into distinct odd
  // parts, chi_sigma counts partitions of n into distinct parts.
  const auto chars = ising_characters(Rational(30));
  std::vector<int> odd, all;
  for (int p = 1; p < 80; ++p) {
    all.push_back(p);
    if (p % 2) odd.push_back(p);
  }
  for (int n = 0; n < 30; ++n) {
    CAPTURE(n);
    CHECK(chars[0].coefficient(Rational(-1, 48) + n) == distinct_partitions(2 * n, odd));
    CHECK(chars[1].coefficient(Rational(23, 48) + n) == distinct_partitions(2 * n + 1, odd));
    CHECK(chars[2].coefficient(Rational(1, 24) + n) == distinct_partitions(n, all));
  }
}

TEST_CASE("ising character expansions") {
  const auto chars = ising_characters(Rational(50));
  REQUIRE(chars.size() == 3);
  CHECK(*chars[0].leading_exponent() == Rational(-1, 48));
  CHECK(coefficients_from(chars[0], Rational(-1, 48), Rational(1), 8) ==
        std::vector<long>{1, 0, 1, 1, 2, 2, 3, 3});
  CHECK(*chars[1].leading_exponent() == Rational(23, 48));
  CHECK(coefficients_from(chars[1], Rational(23, 48), Rational(1), 8) ==
        std::vector<long>{1, 1, 1, 1, 2, 2, 3, 4});
  CHECK(*chars[2].leading_exponent() == Rational(1, 24));
  CHECK(coefficients_from(chars[2], Rational(1, 24), Rational(1), 8) ==
        std::vector<long>{1, 1, 1, 2, 2, 3, 4, 5});
  for (const auto& chi : chars) CHECK(chi.cutoff() == Rational(50));
}

TEST_CASE("ising exponents sit on h - c/24 + integers") {
  const auto md = ising_modular_data();
  const auto chars = ising_characters(Rational(20));
  for (std::size_t m = 0; m < 3; ++m) {
    const Rational base = md.weights()[m] - md.central_charge() / 24;
    for (const auto& [e, c] : chars[m].terms()) {
      CHECK((e - base).denominator() == 1);
      CHECK(c.get_den() == 1);
      CHECK(c > 0);
    }
  }
}

TEST_CASE("su2 characters") {
  const auto k0 = su2_characters(0, Rational(20));
  REQUIRE(k0.size() == 1);
  CHECK(k0[0] == PuiseuxSeries::constant(1, Rational(20)));

  const auto k1 = su2_characters(1, Rational(20));
  CHECK(*k1[0].leading_exponent() == Rational(-1, 24));
  CHECK(*k1[1].leading_exponent() == Rational(1, 4) - Rational(1, 24));
  // level-1 vacuum: (1 + 3q + 4q^2 + 7q^3 + ...)
  CHECK(coefficients_from(k1[0], Rational(-1, 24), Rational(1), 4) == std::vector<long>{1, 3, 4, 7});
  // level-1 spin-1/2: 2 + 2q + 6q^2 + 8q^3 + ...
  CHECK(coefficients_from(k1[1], Rational(5, 24), Rational(1), 4) == std::vector<long>{2, 2, 6, 8});

  for (int k = 1; k <= 6; ++k) {
    const auto md = su2_modular_data(k);
    const auto chars = su2_characters(k, Rational(15));
    for (int a = 0; a <= k; ++a) {
      const Rational base = md.weights()[a] - md.central_charge() / 24;
      CHECK(*chars[a].leading_exponent() == base);
      CHECK(chars[a].coefficient(base) == a + 1);
      for (const auto& [e, c] : chars[a].terms()) {
        CHECK((e - base).denominator() == 1);
        CHECK(c >= 0);
        CHECK(c.get_den() == 1);
      }
    }
  }
}

TEST_CASE("T transform holds term by term") {
  const std::complex<double> tau(0.3, 0.8);
  CHECK(check_modular_transform(ising_modular_data(), ising_characters(), tau, Transform::T) < 1e-12);
  for (int k = 1; k <= 4; ++k) {
    CHECK(check_modular_transform(su2_modular_data(k), su2_characters(k), tau, Transform::T) < 1e-10);
  }
}

TEST_CASE("S transform at tau = i") {
  const std::complex<double> i(0.0, 1.0);
  CHECK(check_modular_transform(ising_modular_data(), ising_characters(), i, Transform::S) < 1e-8);
  CHECK(check_modular_transform(su2_modular_data(1), su2_characters(1), i, Transform::S) < 1e-8);
  CHECK(check_modular_transform(su2_modular_data(2), su2_characters(2), i, Transform::S) < 1e-6);
}

TEST_CASE("S transform away from the fixed point") {
  const std::complex<double> tau(0.2, 1.1);
  CHECK(check_modular_transform(ising_modular_data(), ising_characters(), tau, Transform::S) < 1e-8);
  CHECK(check_modular_transform(su2_modular_data(3), su2_characters(3), tau, Transform::S) < 1e-8);
}

TEST_CASE("S residual shrinks as the cutoff grows") {
  const auto md = ising_modular_data();
  const std::complex<double> i(0.0, 1.0);
  double previous = 1e300;
  for (int cutoff : {1, 2, 3, 4}) {
    const double r = check_modular_transform(md, ising_characters(Rational(cutoff)), i, Transform::S, 1.0);
    CAPTURE(cutoff);
    CHECK(r <= previous * (1 + 1e-9) + 1e-15);
    previous = r;
  }
  CHECK(previous < 1e-8);
}

TEST_CASE("low cutoff is refused") {
  const auto md = ising_modular_data();
  CHECK_THROWS_AS(check_modular_transform(md, ising_characters(Rational(2)), std::complex<double>(0, 1),
                                          Transform::S, 1e-12),
                  Error);
}

TEST_CASE("characters at tau = i are real and positive") {
  const auto values = evaluate_all(ising_characters(), std::complex<double>(0.0, 1.0), 1e-12);
  for (const auto& v : values) {
    CHECK(v.real() > 0.0);
    CHECK(std::abs(v.imag()) < 1e-15);
  }
}
