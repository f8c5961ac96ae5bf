#include "rcft/mcg_reps.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "rcft/error.hpp"

namespace rcft {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSl2zTolerance = 1e-8;
constexpr double kBraidTolerance = 1e-9;

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

std::size_t MCGRep::dimension() const {
  return generators.empty() ? 0 : static_cast<std::size_t>(generators.front().rows());
}

Eigen::MatrixXcd MCGRep::evaluate(const Word& word) const {
  const auto n = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(n, n);
  for (int letter : word) {
    const auto g = static_cast<std::size_t>(std::abs(letter));
    if (letter == 0 || g > generators.size())
      fail(ErrorCode::InvalidArgument, "word refers to an unknown generator");
    const Eigen::MatrixXcd& m = generators[g - 1];
    out = letter > 0 ? Eigen::MatrixXcd(out * m) : Eigen::MatrixXcd(out * m.inverse());
  }
  return out;
}

std::vector<RelationCheck> check_relations(const MCGRep& rep, double tol) {
  std::vector<RelationCheck> out;
  for (const Relation& rel : rep.relations) {
    const Eigen::MatrixXcd lhs = rep.evaluate(rel.lhs);
    const Eigen::MatrixXcd rhs = rep.evaluate(rel.rhs);
    RelationCheck c;
    c.name = rel.name;
    // Least-squares scalar: <rhs, lhs> / <rhs, rhs>.
    const Complex num = (rhs.adjoint() * lhs).trace();
    const double den = rhs.squaredNorm();
    c.scalar = den > 0 ? num / den : Complex(0.0, 0.0);
    c.projective_residual = max_abs(lhs - c.scalar * rhs);
    c.unimodular_residual = std::abs(std::abs(c.scalar) - 1.0);
    c.pass = c.projective_residual < tol && c.unimodular_residual < tol;
    if (rel.expected) {
      c.exact_residual = max_abs(lhs - *rel.expected * rhs);
      c.pass = c.pass && *c.exact_residual < tol;
    }
    out.push_back(c);
  }
  return out;
}

double unitarity_residual(const MCGRep& rep) {
  double worst = 0.0;
  for (const auto& g : rep.generators) {
    const auto n = g.rows();
    worst = std::max(worst, max_abs(g.adjoint() * g - Eigen::MatrixXcd::Identity(n, n)));
  }
  return worst;
}

MCGRep sl2z_rep(const ModularData& md) {
  MCGRep rep;
  rep.name = "SL(2,Z)";
  rep.generator_names = {"S", "T"};
  rep.generators = {md.s(), md.t_matrix()};
  const Complex one(1.0, 0.0);
  rep.relations = {
      {"S^4=I", {1, 1, 1, 1}, {}, one},
      {"(ST)^3=S^2", {1, 2, 1, 2, 1, 2}, {1, 1}, one},
      {"S^2T=TS^2", {1, 1, 2}, {2, 1, 1}, one},
  };
  for (const RelationCheck& c : check_relations(rep, kSl2zTolerance))
    if (!c.pass)
      fail(ErrorCode::Validation, "invalid modular data: relation " + c.name + " fails");
  return rep;
}

DualityData ising_duality_data() {
  DualityData dd;
  const double r = 1.0 / std::sqrt(2.0);
  dd.f << r, r, r, -r;
  dd.d = Eigen::Matrix2cd::Zero();
  dd.d(0, 0) = std::polar(1.0, kPi / 8);
  dd.d(1, 1) = std::polar(1.0, -3 * kPi / 8);
  const Complex i(0.0, 1.0);
  dd.b << 1.0, i, i, 1.0;
  dd.b *= std::polar(r, -kPi / 8);
  if (max_abs(dd.f * dd.d * dd.f - dd.b) > 1e-12)
    fail(ErrorCode::Internal, "Ising duality data: B != F D F");
  return dd;
}

MCGRep ising_braid_rep() {
  const DualityData dd = ising_duality_data();
  MCGRep rep;
  rep.name = "Ising (0,4) braid";
  rep.generator_names = {"sigma1", "sigma2", "sigma3"};
  rep.generators = {dd.d, dd.b, dd.d};
  const Complex one(1.0, 0.0);
  rep.relations = {
      {"s1 s2 s1 = s2 s1 s2", {1, 2, 1}, {2, 1, 2}, one},
      {"s2 s3 s2 = s3 s2 s3", {2, 3, 2}, {3, 2, 3}, one},
      {"s1 s3 = s3 s1", {1, 3}, {3, 1}, one},
      {"s1 s2 s3 s3 s2 s1 = c", {1, 2, 3, 3, 2, 1}, {}, std::nullopt},
      {"(s1 s2 s3)^4 = c", {1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3}, {}, std::nullopt},
  };
  for (const RelationCheck& c : check_relations(rep, kBraidTolerance))
    if (!c.pass) fail(ErrorCode::Internal, "Ising braid relation " + c.name + " fails");
  return rep;
}

Eigen::MatrixXcd normalize_phase(const Eigen::MatrixXcd& m, double tol) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (std::abs(m(r, c)) > tol) return m * std::polar(1.0, -std::arg(m(r, c)));
  return m;
}

ClosureResult projective_image_closure(const MCGRep& rep, std::size_t max_elems, double tol) {
  if (unitarity_residual(rep) > 1e-8)
    fail(ErrorCode::InvalidArgument, "closure needs unitary generators");
  const auto n = static_cast<Eigen::Index>(rep.dimension());
  // Bucket by the phase-invariant sum of moduli; near-equal matrices share or neighbor a bucket.
  const double grid = 1e-6;
  std::multimap<long long, std::size_t> buckets;
  std::vector<Eigen::MatrixXcd> elems;
  auto key = [grid](const Eigen::MatrixXcd& m) {
    return static_cast<long long>(std::llround(m.cwiseAbs().sum() / grid));
  };
  auto find = [&](const Eigen::MatrixXcd& m) {
    const long long k = key(m);
    for (long long b = k - 1; b <= k + 1; ++b) {
      auto [lo, hi] = buckets.equal_range(b);
      for (auto it = lo; it != hi; ++it)
        if (max_abs(elems[it->second] - m) < tol) return true;
    }
    return false;
  };
  auto insert = [&](Eigen::MatrixXcd m) {
    buckets.emplace(key(m), elems.size());
    elems.push_back(std::move(m));
  };

  ClosureResult result;
  insert(Eigen::MatrixXcd::Identity(n, n));
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const auto& g : rep.generators) {
      Eigen::MatrixXcd next = normalize_phase(elems[idx] * g, tol);
      if (find(next)) continue;
      if (elems.size() >= max_elems) {
        result.finite = false;
        result.elements = elems.size();
        return result;
      }
      insert(std::move(next));
      frontier.push_back(elems.size() - 1);
    }
  }
  result.finite = true;
  result.elements = elems.size();
  return result;
}

}  // namespace rcft
