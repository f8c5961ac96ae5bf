#include "rcft/modular_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "rcft/error.hpp"

namespace rcft {

namespace {

Complex phase_of(const Rational& turns) {
  double x = to_double(fractional_part(turns));
  return std::polar(1.0, 2.0 * std::numbers::pi * x);
}

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct NearestPermutation {
  std::vector<std::size_t> perm;
  double residual;
};

// Rounds a matrix to the permutation matrix picking the largest entry of each row.
NearestPermutation nearest_permutation(const Eigen::MatrixXcd& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  NearestPermutation out{std::vector<std::size_t>(n), 0.0};
  std::vector<bool> used(n, false);
  bool bijective = true;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
  for (std::size_t i = 0; i < n; ++i) {
    Eigen::Index j = 0;
    m.row(static_cast<Eigen::Index>(i)).cwiseAbs().maxCoeff(&j);
    out.perm[i] = static_cast<std::size_t>(j);
    if (used[out.perm[i]]) bijective = false;
    used[out.perm[i]] = true;
    p(static_cast<Eigen::Index>(i), j) = 1.0;
  }
  out.residual = max_abs(m - p);
  if (!bijective) out.residual = std::max(out.residual, 1.0);
  return out;
}

}  // namespace

ModularData::ModularData(std::vector<Label> labels, std::size_t vacuum, Eigen::MatrixXcd s,
                         Rational central_charge, std::vector<Rational> weights)
    : labels_(std::move(labels)),
      vacuum_(vacuum),
      s_(std::move(s)),
      central_charge_(central_charge),
      weights_(std::move(weights)) {
  const auto n = labels_.size();
  if (n == 0) fail(ErrorCode::Validation, "modular data needs at least one label");
  if (static_cast<std::size_t>(s_.rows()) != n || static_cast<std::size_t>(s_.cols()) != n) {
    fail(ErrorCode::Validation, "dimension mismatch: S is " + std::to_string(s_.rows()) + "x" +
                                    std::to_string(s_.cols()) + " for " + std::to_string(n) +
                                    " labels");
  }
  if (weights_.size() != n) {
    fail(ErrorCode::Validation, "dimension mismatch: " + std::to_string(weights_.size()) +
                                    " weights for " + std::to_string(n) + " labels");
  }
  if (vacuum_ >= n) fail(ErrorCode::Validation, "vacuum index out of range");
  std::set<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    labels_[i].index = i;
    if (!names.insert(labels_[i].name).second) {
      fail(ErrorCode::Validation, "duplicate label name '" + labels_[i].name + "'");
    }
  }
  t_.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    t_(static_cast<Eigen::Index>(i)) = phase_of(weights_[i] - central_charge_ / 24);
  }
}

std::optional<std::size_t> ModularData::find(std::string_view name) const {
  for (const auto& l : labels_) {
    if (l.name == name) return l.index;
    if (std::find(l.aliases.begin(), l.aliases.end(), name) != l.aliases.end()) return l.index;
  }
  std::size_t idx = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), idx);
  if (ec == std::errc() && ptr == name.data() + name.size() && idx < labels_.size()) return idx;
  return std::nullopt;
}

std::size_t ModularData::index_of(std::string_view name) const {
  auto idx = find(name);
  if (!idx) fail(ErrorCode::InvalidArgument, "unknown label '" + std::string(name) + "'");
  return *idx;
}

bool ValidationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

double ValidationReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks) r = std::max(r, c.residual);
  return r;
}

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.pass) return &c;
  }
  return nullptr;
}

ValidationReport validate_modular_data(const ModularData& md, double tol) {
  const auto n = static_cast<Eigen::Index>(md.size());
  const Eigen::MatrixXcd& s = md.s();
  const Eigen::MatrixXcd t = md.t_matrix();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  ValidationReport report;
  report.tolerance = tol;
  auto add = [&](std::string name, double residual) {
    report.checks.push_back({std::move(name), residual, residual < tol});
  };

  add("unitary", max_abs(s * s.adjoint() - id));
  add("symmetric", max_abs(s - s.transpose()));

  const Eigen::MatrixXcd s2 = s * s;
  auto c = nearest_permutation(s2);
  add("S^2=C permutation", c.residual);

  double c2 = 0.0;
  for (std::size_t i = 0; i < c.perm.size(); ++i) {
    if (c.perm[c.perm[i]] != i) c2 = 1.0;
  }
  add("C^2=I", c2);
  add("C fixes vacuum", c.perm[md.vacuum()] == md.vacuum() ? 0.0 : 1.0);

  const Eigen::MatrixXcd st = s * t;
  add("(ST)^3=S^2", max_abs(st * st * st - s2));

  double unimodular = 0.0;
  double weights = 0.0;
  const double two_pi = 2.0 * std::numbers::pi;
  for (Eigen::Index i = 0; i < n; ++i) {
    unimodular = std::max(unimodular, std::abs(std::abs(md.t()(i)) - 1.0));
    const double turns = to_double(md.weights()[static_cast<std::size_t>(i)]) -
                         to_double(md.central_charge()) / 24.0;
    weights = std::max(weights, std::abs(md.t()(i) - std::exp(Complex(0.0, two_pi * turns))));
  }
  add("|T|=1", unimodular);
  add("T matches weights", weights);

  double positivity = 0.0;
  for (Eigen::Index p = 0; p < n; ++p) {
    const Complex x = s(static_cast<Eigen::Index>(md.vacuum()), p);
    positivity = std::max(positivity, std::abs(x.imag()) + std::max(0.0, -x.real()));
    if (std::abs(x) < tol) positivity = std::max(positivity, 1.0);
  }
  add("vacuum row positive", positivity);
  return report;
}

void require_valid(const ModularData& md, double tol) {
  auto report = validate_modular_data(md, tol);
  if (const auto* bad = report.first_failure()) {
    char residual[32];
    std::snprintf(residual, sizeof residual, "%.6e", bad->residual);
    fail(ErrorCode::Validation,
         "modular data fails check '" + bad->name + "' (residual " + residual + ")");
  }
}

ModularData ising_modular_data() {
  const double r = std::numbers::sqrt2 / 2.0;
  Eigen::MatrixXcd s(3, 3);
  s << 0.5, 0.5, r,
       0.5, 0.5, -r,
       r, -r, 0.0;
  std::vector<Label> labels{
      {0, "𝒱", {"V", "vac"}},
      {1, "ε", {"eps", "epsilon"}},
      {2, "σ", {"sigma", "s"}},
  };
  return ModularData(std::move(labels), 0, std::move(s), Rational(1, 2),
                     {Rational(0), Rational(1, 2), Rational(1, 16)});
}

ModularData su2_modular_data(int k) {
  if (k < 0) fail(ErrorCode::InvalidArgument, "SU(2) level must be nonnegative");
  const int n = k + 1;
  const double norm = std::sqrt(2.0 / (k + 2));
  Eigen::MatrixXcd s(n, n);
  std::vector<Label> labels;
  std::vector<Rational> weights;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      s(a, b) = norm * std::sin(std::numbers::pi * (a + 1) * (b + 1) / (k + 2));
    }
    labels.push_back({static_cast<std::size_t>(a), std::to_string(a), {}});
    weights.emplace_back(a * (a + 2), 4 * (k + 2));
  }
  return ModularData(std::move(labels), 0, std::move(s), Rational(3 * k, k + 2),
                     std::move(weights));
}

std::vector<std::size_t> charge_conjugation(const ModularData& md, double tol) {
  auto c = nearest_permutation(md.s() * md.s());
  if (c.residual >= tol) {
    fail(ErrorCode::Validation, "S^2 is not a permutation matrix (residual " +
                                    std::to_string(c.residual) + ")");
  }
  return c.perm;
}

}  // namespace rcft
