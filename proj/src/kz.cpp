#include "rcft/kz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "rcft/error.hpp"

namespace rcft {

namespace {

constexpr double kPi = std::numbers::pi;

struct SpinMatrices {
  Eigen::MatrixXd z, plus, minus;
};

// Basis |j, m> with m = j, j-1, ..., -j.
SpinMatrices spin_matrices(int twice_j) {
  const int d = twice_j + 1;
  const double j = twice_j / 2.0;
  SpinMatrices s{Eigen::MatrixXd::Zero(d, d), Eigen::MatrixXd::Zero(d, d),
                 Eigen::MatrixXd::Zero(d, d)};
  for (int a = 0; a < d; ++a) {
    const double m = j - a;
    s.z(a, a) = m;
    if (a > 0) s.plus(a - 1, a) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  s.minus = s.plus.transpose();
  return s;
}

void check_pair(const SpinSystem& sys, std::size_t i, std::size_t j) {
  if (i >= sys.legs() || j >= sys.legs())
    fail(ErrorCode::InvalidArgument, "leg index out of range");
  if (i == j) fail(ErrorCode::InvalidArgument, "exchange legs must differ");
}

std::string at_t(double t) {
  std::ostringstream os;
  os.precision(6);
  os << " at t=" << t;
  return os.str();
}

}  // namespace

SpinSystem::SpinSystem(int level, std::vector<int> twice_spins)
    : level_(level), twice_spins_(std::move(twice_spins)) {
  if (level_ < 1) fail(ErrorCode::InvalidArgument, "level must be positive");
  if (twice_spins_.size() < 2) fail(ErrorCode::InvalidArgument, "need at least two legs");
  for (int s : twice_spins_) {
    if (s < 0) fail(ErrorCode::InvalidArgument, "spins must be non-negative");
    dims_.push_back(static_cast<std::size_t>(s) + 1);
    full_dim_ *= dims_.back();
    if (full_dim_ > 4096) fail(ErrorCode::Limit, "tensor space too large");
  }
  const auto n = static_cast<Eigen::Index>(full_dim_);
  Eigen::MatrixXd jz = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd jplus = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t leg = 0; leg < legs(); ++leg) {
    const SpinMatrices s = spin_matrices(twice_spins_[leg]);
    jz += leg_operator(leg, s.z);
    jplus += leg_operator(leg, s.plus);
  }
  Eigen::MatrixXd stacked(2 * n, n);
  stacked << jz, jplus;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  Eigen::Index rank = 0;
  for (Eigen::Index a = 0; a < sv.size(); ++a)
    if (sv(a) > 1e-9) ++rank;
  Eigen::MatrixXd null = svd.matrixV().rightCols(n - rank);
  if (null.cols() == 0) {
    basis_ = null;
    return;
  }
  // Diagonalize the 1-2 exchange inside the invariant space.
  Eigen::MatrixXd omega = null.transpose() * full_exchange(0, 1) * null;
  omega = (omega + omega.transpose()) / 2;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(omega);
  basis_ = null * eig.eigenvectors().rowwise().reverse();
  for (Eigen::Index c = 0; c < basis_.cols(); ++c) {
    for (Eigen::Index r = 0; r < basis_.rows(); ++r) {
      if (std::abs(basis_(r, c)) > 1e-9) {
        if (basis_(r, c) < 0) basis_.col(c) *= -1;
        break;
      }
    }
  }
}

Eigen::MatrixXd SpinSystem::leg_operator(std::size_t leg, const Eigen::MatrixXd& op) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Ones(1, 1);
  for (std::size_t l = 0; l < legs(); ++l) {
    const auto d = static_cast<Eigen::Index>(dims_[l]);
    const Eigen::MatrixXd factor = l == leg ? op : Eigen::MatrixXd::Identity(d, d);
    Eigen::MatrixXd next = Eigen::MatrixXd::Zero(out.rows() * d, out.cols() * d);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c)
        if (out(r, c) != 0.0) next.block(r * d, c * d, d, d) = out(r, c) * factor;
    out = std::move(next);
  }
  return out;
}

Eigen::MatrixXd SpinSystem::full_exchange(std::size_t i, std::size_t j) const {
  const SpinMatrices si = spin_matrices(twice_spins_.at(i));
  const SpinMatrices sj = spin_matrices(twice_spins_.at(j));
  const Eigen::MatrixXd zi = leg_operator(i, si.z), zj = leg_operator(j, sj.z);
  const Eigen::MatrixXd pi = leg_operator(i, si.plus), pj = leg_operator(j, sj.plus);
  const Eigen::MatrixXd mi = leg_operator(i, si.minus), mj = leg_operator(j, sj.minus);
  return zi * zj + 0.5 * (pi * mj + mi * pj);
}

Eigen::MatrixXd SpinSystem::full_swap(std::size_t i, std::size_t j) const {
  if (twice_spins_.at(i) != twice_spins_.at(j))
    fail(ErrorCode::InvalidArgument, "cannot exchange legs of different spin");
  const auto n = static_cast<Eigen::Index>(full_dim_);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  std::vector<std::size_t> digits(legs());
  for (std::size_t idx = 0; idx < full_dim_; ++idx) {
    std::size_t rest = idx;
    for (std::size_t l = legs(); l-- > 0;) {
      digits[l] = rest % dims_[l];
      rest /= dims_[l];
    }
    std::swap(digits[i], digits[j]);
    std::size_t target = 0;
    for (std::size_t l = 0; l < legs(); ++l) target = target * dims_[l] + digits[l];
    p(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(idx)) = 1.0;
  }
  return p;
}

ExchangeOperator casimir_exchange(const SpinSystem& sys, std::size_t i, std::size_t j) {
  check_pair(sys, i, j);
  Eigen::MatrixXd omega = sys.basis().transpose() * sys.full_exchange(i, j) * sys.basis();
  omega = (omega + omega.transpose()) / 2;
  return {i, j, omega};
}

ConfigPath::ConfigPath(std::function<Sample(double)> at, std::vector<std::size_t> permutation,
                       std::vector<double> breakpoints)
    : at_(std::move(at)), permutation_(std::move(permutation)), breakpoints_(std::move(breakpoints)) {
  std::sort(breakpoints_.begin(), breakpoints_.end());
}

ConfigPath::Config ConfigPath::default_base(std::size_t n) {
  Config z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = Complex(static_cast<double>(i), 0.0);
  return z;
}

ConfigPath ConfigPath::constant(Config base) {
  std::vector<std::size_t> id(base.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  const Config zero(base.size(), Complex(0.0, 0.0));
  return ConfigPath([base, zero](double) { return Sample{base, zero}; }, std::move(id));
}

ConfigPath ConfigPath::loop(Config base, std::size_t i, std::size_t j, double turns) {
  if (i >= base.size() || j >= base.size() || i == j)
    fail(ErrorCode::InvalidArgument, "invalid legs for loop");
  std::vector<std::size_t> perm(base.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  const double half_turns = 2.0 * turns;
  if (std::abs(half_turns - std::round(half_turns)) > 1e-12)
    fail(ErrorCode::InvalidArgument, "turns must be a multiple of 1/2");
  if (static_cast<long long>(std::llround(half_turns)) % 2 != 0) std::swap(perm[i], perm[j]);
  const Complex mid = (base[i] + base[j]) / 2.0;
  const Complex ri = base[i] - mid, rj = base[j] - mid;
  const double total = 2 * kPi * turns;
  auto at = [base, i, j, mid, ri, rj, total](double t) {
    Sample s{base, Config(base.size(), Complex(0.0, 0.0))};
    const Complex rot = std::polar(1.0, total * t);
    const Complex drot = Complex(0.0, total) * rot;
    s.z[i] = mid + ri * rot;
    s.z[j] = mid + rj * rot;
    s.dz[i] = ri * drot;
    s.dz[j] = rj * drot;
    return s;
  };
  return ConfigPath(at, std::move(perm));
}

ConfigPath ConfigPath::swap(Config base, std::size_t i, std::size_t j) {
  return loop(std::move(base), i, j, 0.5);
}

ConfigPath ConfigPath::encircle(Config base, std::size_t i, std::size_t j, double radius) {
  if (i >= base.size() || j >= base.size() || i == j)
    fail(ErrorCode::InvalidArgument, "invalid legs for encircle");
  const Complex from = base[i], center = base[j];
  const double dist = std::abs(from - center);
  if (!(radius > 0) || radius >= dist) fail(ErrorCode::InvalidArgument, "radius out of range");
  const Complex dir = (center - from) / dist;
  const Complex near = center - dir * radius;
  const Complex offset = near - center;
  std::vector<std::size_t> id(base.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  auto at = [base, i, from, near, center, offset](double t) {
    Sample s{base, Config(base.size(), Complex(0.0, 0.0))};
    if (t < 1.0 / 3) {
      s.z[i] = from + (near - from) * (3 * t);
      s.dz[i] = 3.0 * (near - from);
    } else if (t < 2.0 / 3) {
      const double theta = 2 * kPi * (3 * t - 1);
      s.z[i] = center + offset * std::polar(1.0, theta);
      s.dz[i] = offset * Complex(0.0, 6 * kPi) * std::polar(1.0, theta);
    } else {
      s.z[i] = near + (from - near) * (3 * t - 2);
      s.dz[i] = 3.0 * (from - near);
    }
    return s;
  };
  return ConfigPath(at, std::move(id), {1.0 / 3, 2.0 / 3});
}

ConfigPath ConfigPath::polyline(std::vector<Config> samples) {
  if (samples.size() < 2) fail(ErrorCode::InvalidArgument, "polyline needs at least two samples");
  const std::size_t n = samples.front().size();
  for (const auto& c : samples)
    if (c.size() != n) fail(ErrorCode::InvalidArgument, "polyline samples differ in size");
  std::vector<std::size_t> perm(n);
  const Config& first = samples.front();
  const Config& last = samples.back();
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t best = 0;
    double best_d = std::abs(last[a] - first[0]);
    for (std::size_t b = 1; b < n; ++b) {
      const double d = std::abs(last[a] - first[b]);
      if (d < best_d) best_d = d, best = b;
    }
    perm[a] = best;
  }
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool is_perm = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!is_perm) std::iota(perm.begin(), perm.end(), std::size_t{0});
  const double segments = static_cast<double>(samples.size() - 1);
  auto at = [samples, segments](double t) {
    const double x = std::clamp(t, 0.0, 1.0) * segments;
    auto k = static_cast<std::size_t>(std::min(std::floor(x), segments - 1));
    const double u = x - static_cast<double>(k);
    const Config& a = samples[k];
    const Config& b = samples[k + 1];
    Sample s{a, a};
    for (std::size_t m = 0; m < a.size(); ++m) {
      s.z[m] = a[m] + (b[m] - a[m]) * u;
      s.dz[m] = (b[m] - a[m]) * segments;
    }
    return s;
  };
  std::vector<double> breaks;
  for (std::size_t k = 1; k + 1 < samples.size(); ++k) breaks.push_back(static_cast<double>(k) / segments);
  return ConfigPath(at, std::move(perm), std::move(breaks));
}

ConfigPath ConfigPath::then(const ConfigPath& next) const {
  if (next.legs() != legs()) fail(ErrorCode::InvalidArgument, "paths have different leg counts");
  const Sample end = at(1.0), start = next.at(0.0);
  for (std::size_t a = 0; a < legs(); ++a)
    if (std::abs(end.z[a] - start.z[a]) > 1e-9)
      fail(ErrorCode::InvalidArgument, "paths do not join");
  std::vector<std::size_t> perm(legs());
  for (std::size_t a = 0; a < legs(); ++a) perm[a] = permutation_[next.permutation_[a]];
  auto first = at_, second = next.at_;
  auto at = [first, second](double t) {
    Sample s = t < 0.5 ? first(2 * t) : second(2 * t - 1);
    for (auto& v : s.dz) v *= 2.0;
    return s;
  };
  std::vector<double> breaks{0.5};
  for (double b : breakpoints_) breaks.push_back(b / 2);
  for (double b : next.breakpoints_) breaks.push_back(0.5 + b / 2);
  return ConfigPath(at, std::move(perm), std::move(breaks));
}

ConfigPath ConfigPath::reversed() const {
  std::vector<std::size_t> perm(legs());
  for (std::size_t a = 0; a < legs(); ++a) perm[permutation_[a]] = a;
  auto f = at_;
  auto at = [f](double t) {
    Sample s = f(1.0 - t);
    for (auto& v : s.dz) v = -v;
    return s;
  };
  std::vector<double> breaks;
  for (double b : breakpoints_) breaks.push_back(1.0 - b);
  return ConfigPath(at, std::move(perm), std::move(breaks));
}

namespace {

using State = std::vector<Complex>;

struct KzSystem {
  const std::vector<ExchangeOperator>* omegas;
  const ConfigPath* path;
  double inv_k2;
  Eigen::Index d;

  Eigen::MatrixXcd connection(double t) const {
    const ConfigPath::Sample s = path->at(t);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d);
    for (const auto& om : *omegas) {
      const Complex coef = (s.dz[om.i] - s.dz[om.j]) / (s.z[om.i] - s.z[om.j]);
      if (coef != Complex(0.0, 0.0)) a += (coef * inv_k2) * om.omega.cast<Complex>();
    }
    return a;
  }

  void operator()(const State& y, State& dy, double t) const {
    Eigen::Map<const Eigen::MatrixXcd> ym(y.data(), d, d);
    Eigen::Map<Eigen::MatrixXcd> dym(dy.data(), d, d);
    dym = connection(t) * ym;
  }
};

double min_distance(const ConfigPath::Config& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < z.size(); ++a)
    for (std::size_t b = a + 1; b < z.size(); ++b) best = std::min(best, std::abs(z[a] - z[b]));
  return best;
}

void check_clearance(const ConfigPath& path, double t, double clearance) {
  if (min_distance(path.at(t).z) < clearance)
    fail(ErrorCode::Domain, "clearance violation" + at_t(t));
}

Eigen::MatrixXd swap_on_invariants(const SpinSystem& sys, const std::vector<std::size_t>& perm) {
  // Decompose the permutation into transpositions of legs and conjugate into the invariant basis.
  Eigen::MatrixXd full = Eigen::MatrixXd::Identity(sys.basis().rows(), sys.basis().rows());
  std::vector<std::size_t> p = perm;
  for (std::size_t a = 0; a < p.size(); ++a) {
    while (p[a] != a) {
      const std::size_t b = p[a];
      full = sys.full_swap(a, b) * full;
      std::swap(p[a], p[b]);
    }
  }
  return sys.basis().transpose() * full * sys.basis();
}

}  // namespace

Eigen::MatrixXcd kz_transport_matrix(const SpinSystem& sys, const ConfigPath& path,
                                     const KzOptions& options) {
  namespace ode = boost::numeric::odeint;
  if (path.legs() != sys.legs()) fail(ErrorCode::InvalidArgument, "path and system leg counts differ");
  const auto d = static_cast<Eigen::Index>(sys.dimension());
  std::vector<ExchangeOperator> omegas;
  for (std::size_t i = 0; i < sys.legs(); ++i)
    for (std::size_t j = i + 1; j < sys.legs(); ++j) omegas.push_back(casimir_exchange(sys, i, j));
  KzSystem rhs{&omegas, &path, 1.0 / (sys.level() + 2), d};

  State y(static_cast<std::size_t>(d * d), Complex(0.0, 0.0));
  for (Eigen::Index a = 0; a < d; ++a) y[static_cast<std::size_t>(a * d + a)] = 1.0;
  if (d == 0) return Eigen::MatrixXcd(0, 0);

  auto stepper = ode::make_controlled(options.abs_tol, options.rel_tol,
                                      ode::runge_kutta_dopri5<State>());
  std::vector<double> stops;
  for (double b : path.breakpoints())
    if (b > 0.0 && b < 1.0) stops.push_back(b);
  stops.push_back(1.0);
  double t = 0.0, dt = 1e-3;
  check_clearance(path, t, options.clearance);
  std::size_t steps = 0;
  for (double stop : stops) {
    while (t < stop) {
      if (steps++ >= options.max_steps) fail(ErrorCode::Limit, "step limit exceeded" + at_t(t));
      const bool last = t + dt >= stop;
      const double saved_dt = dt;
      if (last) dt = stop - t;
      if (stepper.try_step(rhs, y, t, dt) == ode::success) {
        check_clearance(path, t, options.clearance);
        if (last) {
          t = stop;
          dt = std::max(dt, saved_dt);
        }
      } else if (dt < 1e-14) {
        fail(ErrorCode::Domain, "step size underflow" + at_t(t));
      }
    }
  }
  return Eigen::Map<Eigen::MatrixXcd>(y.data(), d, d);
}

Eigen::VectorXcd kz_transport(const SpinSystem& sys, const ConfigPath& path,
                              const Eigen::VectorXcd& y0, const KzOptions& options) {
  if (static_cast<std::size_t>(y0.size()) != sys.dimension())
    fail(ErrorCode::InvalidArgument, "initial vector has wrong dimension");
  return kz_transport_matrix(sys, path, options) * y0;
}

Eigen::MatrixXcd kz_monodromy(const SpinSystem& sys, const ConfigPath& path,
                              const KzOptions& options) {
  const auto start = path.at(0.0).z, end = path.at(1.0).z;
  const auto& perm = path.permutation();
  for (std::size_t a = 0; a < start.size(); ++a)
    if (std::abs(end[a] - start[perm[a]]) > 1e-9)
      fail(ErrorCode::InvalidArgument, "path is not closed up to relabeling");
  for (std::size_t a = 0; a < perm.size(); ++a)
    if (sys.twice_spins()[a] != sys.twice_spins()[perm[a]])
      fail(ErrorCode::InvalidArgument, "path exchanges legs of different spin");
  const Eigen::MatrixXcd transport = kz_transport_matrix(sys, path, options);
  return swap_on_invariants(sys, perm).cast<Complex>() * transport;
}

std::vector<Complex> eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  const Eigen::VectorXcd v = es.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

double match_eigenvalues(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  if (a.size() > 8) fail(ErrorCode::Limit, "eigenvalue matching limited to 8 values");
  std::vector<std::size_t> idx(b.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  do {
    double worst = 0.0;
    for (std::size_t m = 0; m < a.size(); ++m) worst = std::max(worst, std::abs(a[m] - b[idx[m]]));
    best = std::min(best, worst);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return best;
}

DrinfeldKohnoReport drinfeld_kohno_check(int level, const KzOptions& options) {
  if (level < 2) fail(ErrorCode::InvalidArgument, "Drinfeld-Kohno check needs level >= 2");
  const SpinSystem sys = SpinSystem::four_doublets(level);
  const auto base = ConfigPath::default_base(4);
  DrinfeldKohnoReport r;
  r.level = level;
  r.monodromy = kz_monodromy(sys, ConfigPath::loop(base, 1, 2), options);
  r.kz_eigenvalues = eigenvalues(r.monodromy);

  const double k2 = level + 2.0;
  const ExchangeOperator om = casimir_exchange(sys, 1, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(om.omega);
  for (Eigen::Index a = 0; a < es.eigenvalues().size(); ++a)
    r.predicted.push_back(std::polar(1.0, 2 * kPi * es.eigenvalues()(a) / k2));
  r.exponent_residual = match_eigenvalues(r.kz_eigenvalues, r.predicted);

  if (level == 2) {
    Eigen::Matrix2cd f;
    f << 1, 1, 1, -1;
    f /= std::sqrt(2.0);
    Eigen::Matrix2cd dmat = Eigen::Matrix2cd::Zero();
    dmat(0, 0) = std::polar(1.0, kPi / 8);
    dmat(1, 1) = std::polar(1.0, -3 * kPi / 8);
    const Eigen::MatrixXcd b = f * dmat * f;
    r.braiding_residual = match_eigenvalues(r.kz_eigenvalues, eigenvalues(b));
  }

  const Complex det = r.monodromy.determinant();
  r.determinant_residual = std::abs(det - std::polar(1.0, 2 * kPi * om.omega.trace() / k2));

  for (double radius : {0.5, 0.3}) {
    const Eigen::MatrixXcd alt = kz_monodromy(sys, ConfigPath::encircle(base, 1, 2, radius), options);
    r.homotopy_spread = std::max(r.homotopy_spread, (alt - r.monodromy).cwiseAbs().maxCoeff());
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r.monodromy);
  const auto& sv = svd.singularValues();
  r.condition_number = sv(0) / sv(sv.size() - 1);
  return r;
}

}  // namespace rcft
