#include <doctest.h>

#include <cmath>
#include <numbers>

#include "rcft/error.hpp"
#include "rcft/mcg_reps.hpp"

using namespace rcft;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

const RelationCheck& find_check(const std::vector<RelationCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c;
  FAIL("missing relation " << name);
  return checks.front();
}

}  // namespace

TEST_CASE("Ising SL(2,Z) relations hold exactly") {
  const MCGRep rep = sl2z_rep(ising_modular_data());
  const Eigen::MatrixXcd s = rep.generators[0], t = rep.generators[1];
  const Eigen::MatrixXcd st = s * t;
  CHECK(max_diff(st * st * st, s * s) < 1e-12);
  CHECK(max_diff(s * s, Eigen::MatrixXcd::Identity(3, 3)) < 1e-12);
  for (const auto& c : check_relations(rep, 1e-12)) {
    CAPTURE(c.name);
    CHECK(c.pass);
    REQUIRE(c.exact_residual.has_value());
    CHECK(*c.exact_residual < 1e-12);
    CHECK(std::abs(c.scalar - 1.0) < 1e-12);
  }
  CHECK(unitarity_residual(rep) < 1e-12);
}

TEST_CASE("SU(2)_k SL(2,Z) relations") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const MCGRep rep = sl2z_rep(su2_modular_data(k));
    CHECK(unitarity_residual(rep) < 1e-12);
    for (const auto& c : check_relations(rep, 1e-10)) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("trivial theory") {
  const ModularData md({Label{0, "1", {}}}, 0, Eigen::MatrixXcd::Ones(1, 1), Rational(0),
                       {Rational(0)});
  const MCGRep rep = sl2z_rep(md);
  CHECK(rep.generators[0](0, 0) == Complex(1.0, 0.0));
  CHECK(std::abs(rep.generators[1](0, 0) - 1.0) < 1e-15);
  const ClosureResult r = projective_image_closure(rep, 10);
  CHECK(r.finite);
  CHECK(r.elements == 1);
}

TEST_CASE("broken T is rejected") {
  const ModularData ising = ising_modular_data();
  std::vector<Rational> weights = ising.weights();
  weights[2] = Rational(1, 8);
  std::vector<Label> labels(ising.labels().begin(), ising.labels().end());
  const ModularData bad(labels, ising.vacuum(), ising.s(), ising.central_charge(), weights);
  try {
    sl2z_rep(bad);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Validation);
  }
}

TEST_CASE("Ising duality data") {
  const DualityData dd = ising_duality_data();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  CHECK(max_diff(dd.f * dd.f, id) < 1e-15);
  CHECK(max_diff(dd.f * dd.d * dd.f, dd.b) < 1e-12);
  CHECK(max_diff(dd.b.adjoint() * dd.b, id) < 1e-12);
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd printed;
  printed << 1.0, i, i, 1.0;
  printed *= std::polar(1.0, -kPi / 8) / std::sqrt(2.0);
  CHECK(max_diff(dd.b, printed) < 1e-15);

  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(dd.b);
  const Complex e1 = std::polar(1.0, kPi / 8), e2 = std::polar(1.0, -3 * kPi / 8);
  const Complex l0 = es.eigenvalues()(0), l1 = es.eigenvalues()(1);
  const double direct = std::max(std::abs(l0 - e1), std::abs(l1 - e2));
  const double crossed = std::max(std::abs(l0 - e2), std::abs(l1 - e1));
  CHECK(std::min(direct, crossed) < 1e-12);
  CHECK(std::abs(dd.b.determinant() - std::polar(1.0, -kPi / 4)) < 1e-12);
}

TEST_CASE("Ising braid representation") {
  const MCGRep rep = ising_braid_rep();
  CHECK(unitarity_residual(rep) < 1e-12);
  const auto& s1 = rep.generators[0];
  const auto& s2 = rep.generators[1];
  const auto& s3 = rep.generators[2];
  CHECK(max_diff(s1 * s2 * s1, s2 * s1 * s2) < 1e-12);
  CHECK(max_diff(s2 * s3 * s2, s3 * s2 * s3) < 1e-12);
  CHECK(max_diff(s1 * s3, s3 * s1) < 1e-15);

  const auto checks = check_relations(rep, 1e-9);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
    CHECK(c.unimodular_residual < 1e-12);
  }
  // A scalar relation word w = c I in dimension 2 has c^2 = det w.
  const Word sphere{1, 2, 3, 3, 2, 1};
  const Word cube4{1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3};
  for (const auto& [name, word] :
       {std::pair{std::string("s1 s2 s3 s3 s2 s1 = c"), sphere},
        std::pair{std::string("(s1 s2 s3)^4 = c"), cube4}}) {
    const RelationCheck& c = find_check(checks, name);
    CHECK(std::abs(c.scalar * c.scalar - rep.evaluate(word).determinant()) < 1e-12);
  }
  CHECK(std::abs(find_check(checks, "s1 s2 s3 s3 s2 s1 = c").scalar - std::polar(1.0, kPi / 4)) < 1e-12);
  CHECK(std::abs(find_check(checks, "(s1 s2 s3)^4 = c").scalar - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("words with inverses") {
  const MCGRep rep = ising_braid_rep();
  CHECK(max_diff(rep.evaluate({2, -2}), Eigen::MatrixXcd::Identity(2, 2)) < 1e-14);
  CHECK_THROWS_AS(rep.evaluate({4}), Error);
  CHECK_THROWS_AS(rep.evaluate({0}), Error);
}

TEST_CASE("phase normalization") {
  const MCGRep rep = ising_braid_rep();
  const Eigen::MatrixXcd a = rep.generators[1] * std::polar(1.0, 0.7);
  const Eigen::MatrixXcd b = rep.generators[0] * rep.generators[1] * std::polar(1.0, -2.1);
  const Eigen::MatrixXcd na = normalize_phase(a);
  CHECK(max_diff(normalize_phase(na), na) < 1e-15);
  CHECK(std::abs(na(0, 0).imag()) < 1e-15);
  CHECK(na(0, 0).real() > 0);
  CHECK(max_diff(normalize_phase(a * b), normalize_phase(na * normalize_phase(b))) < 1e-14);
  Eigen::Matrix2cd lower = Eigen::Matrix2cd::Zero();
  lower(1, 0) = Complex(0.0, 2.0);
  lower(0, 1) = Complex(-1.0, 0.0);
  CHECK(std::abs(normalize_phase(lower)(1, 0) - 2.0) < 1e-15);
}

TEST_CASE("projective closure") {
  const ClosureResult ising = projective_image_closure(ising_braid_rep(), 10000);
  CHECK(ising.finite);
  CHECK(ising.elements == 24);

  MCGRep rotation;
  rotation.name = "irrational rotation";
  rotation.generator_names = {"r"};
  Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(2, 2);
  r(0, 0) = std::polar(1.0, 1.0);
  rotation.generators = {r};
  const ClosureResult inf = projective_image_closure(rotation, 500);
  CHECK_FALSE(inf.finite);
  CHECK(inf.elements == 500);

  MCGRep not_unitary = rotation;
  not_unitary.generators[0](0, 0) = 2.0;
  CHECK_THROWS_AS(projective_image_closure(not_unitary, 10), Error);

  const ClosureResult ising_sl2z = projective_image_closure(sl2z_rep(ising_modular_data()), 10000);
  CHECK(ising_sl2z.finite);
}
