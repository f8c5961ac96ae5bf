#include "rcft/invariants.hpp"

#include <cmath>
#include <sstream>

#include "rcft/characters.hpp"
#include "rcft/error.hpp"
#include "rcft/fusion.hpp"

namespace rcft {

namespace {

constexpr double kKernelTolerance = 1e-9;
constexpr double kRankGap = 1e-6;

// Nearest p/q with q <= 1000 when within tol, otherwise x unchanged.
double snap_rational(double x, double tol) {
  double best = x;
  double h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 20; ++iter) {
    const double a = std::floor(r);
    const double h2 = a * h1 + h0;
    const double k2 = a * k1 + k0;
    if (k2 > 1000) break;
    if (std::abs(h2 / k2 - x) < tol) {
      best = h2 / k2;
      break;
    }
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(r - a) < 1e-15) break;
    r = 1.0 / (r - a);
  }
  return best;
}

}  // namespace

double commutation_residual(const ModularData& md, const Eigen::MatrixXi& z) {
  const Eigen::MatrixXcd zc = z.cast<double>().cast<Complex>();
  const Eigen::MatrixXcd t = md.t_matrix();
  return std::max((zc * md.s() - md.s() * zc).cwiseAbs().maxCoeff(),
                  (zc * t - t * zc).cwiseAbs().maxCoeff());
}

std::vector<Eigen::MatrixXd> commutant_basis(const ModularData& md) {
  const auto n = static_cast<Eigen::Index>(md.size());
  const Eigen::Index unknowns = n * n;
  // vec(Z) is column-major; (XZ - ZX)_{ij} = sum_k X_ik Z_kj - Z_ik X_kj
  Eigen::MatrixXd system = Eigen::MatrixXd::Zero(4 * unknowns, unknowns);
  const Eigen::MatrixXcd t = md.t_matrix();
  const Eigen::MatrixXcd* generators[] = {&md.s(), &t};
  Eigen::Index row = 0;
  for (const auto* x : generators) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex left = (*x)(i, k);   // coefficient of Z_kj
          const Complex right = (*x)(k, j);  // coefficient of Z_ik
          system(row, j * n + k) += left.real();
          system(row + 1, j * n + k) += left.imag();
          system(row, k * n + i) -= right.real();
          system(row + 1, k * n + i) -= right.imag();
        }
        row += 2;
      }
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  const double scale = std::max(1.0, sigma(0));
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > kRankGap * scale) {
      ++rank;
    } else if (sigma(i) > kKernelTolerance * scale) {
      std::ostringstream os;
      os << "commutant system is numerically rank-deficient (singular value " << sigma(i) << ")";
      fail(ErrorCode::Validation, os.str());
    }
  }
  const Eigen::Index dim = unknowns - rank;
  Eigen::MatrixXd kernel = svd.matrixV().rightCols(dim).transpose();  // dim x unknowns

  // Reduced row-echelon form so the basis is canonical and rational.
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < unknowns && pivot_row < dim; ++col) {
    Eigen::Index best = pivot_row;
    kernel.col(col).segment(pivot_row, dim - pivot_row).cwiseAbs().maxCoeff(&best);
    best += pivot_row;
    if (std::abs(kernel(best, col)) < kKernelTolerance) continue;
    kernel.row(pivot_row).swap(kernel.row(best));
    kernel.row(pivot_row) /= kernel(pivot_row, col);
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r != pivot_row) kernel.row(r) -= kernel(r, col) * kernel.row(pivot_row);
    }
    ++pivot_row;
  }

  std::vector<Eigen::MatrixXd> basis;
  for (Eigen::Index r = 0; r < dim; ++r) {
    Eigen::MatrixXd z(n, n);
    for (Eigen::Index idx = 0; idx < unknowns; ++idx) {
      z(idx % n, idx / n) = snap_rational(kernel(r, idx), kKernelTolerance);
    }
    basis.push_back(std::move(z));
  }
  return basis;
}

std::vector<InvariantMatrix> enumerate_invariants(const ModularData& md,
                                                  const InvariantSearchOptions& options) {
  const auto n = static_cast<Eigen::Index>(md.size());
  const auto vac = static_cast<Eigen::Index>(md.vacuum());
  const auto basis = commutant_basis(md);

  std::vector<double> dims(md.size());
  for (std::size_t a = 0; a < md.size(); ++a) dims[a] = quantum_dimension(md, a);
  Eigen::MatrixXi bound(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      bound(a, b) = static_cast<int>(std::ceil(dims[static_cast<std::size_t>(a)] *
                                               dims[static_cast<std::size_t>(b)] - 1e-9)) +
                    options.bound_slack;
    }
  }

  // The pivot entry of basis matrix j equals the coefficient of that matrix.
  struct Axis {
    Eigen::Index row, col;
    int lo, hi;
  };
  std::vector<Axis> axes;
  long double candidates = 1.0L;
  for (const auto& b : basis) {
    Eigen::Index pr = 0, pc = 0;
    bool found = false;
    for (Eigen::Index c = 0; c < n && !found; ++c) {
      for (Eigen::Index r = 0; r < n && !found; ++r) {
        if (std::abs(b(r, c) - 1.0) < 1e-12) {
          // a pivot is a 1 that is 0 in every other basis matrix
          bool pivot = true;
          for (const auto& other : basis) {
            if (&other != &b && std::abs(other(r, c)) > 1e-12) pivot = false;
          }
          if (pivot) {
            pr = r;
            pc = c;
            found = true;
          }
        }
      }
    }
    if (!found) fail(ErrorCode::Internal, "commutant basis lost its pivot structure");
    Axis axis{pr, pc, 0, bound(pr, pc)};
    if (pr == vac && pc == vac) axis.lo = axis.hi = 1;
    candidates *= static_cast<long double>(axis.hi - axis.lo + 1);
    axes.push_back(axis);
  }
  if (candidates > static_cast<long double>(options.max_candidates)) {
    std::ostringstream os;
    os << "invariant search needs " << static_cast<double>(candidates)
       << " candidates, above the limit " << options.max_candidates;
    fail(ErrorCode::Limit, os.str());
  }

  std::vector<InvariantMatrix> found;
  std::vector<int> coeff(axes.size());
  for (std::size_t i = 0; i < axes.size(); ++i) coeff[i] = axes[i].lo;
  while (true) {
    Eigen::MatrixXd z = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < axes.size(); ++i) z += coeff[i] * basis[i];
    bool ok = true;
    Eigen::MatrixXi zi(n, n);
    for (Eigen::Index a = 0; a < n && ok; ++a) {
      for (Eigen::Index b = 0; b < n && ok; ++b) {
        const double v = std::round(z(a, b));
        if (std::abs(z(a, b) - v) > 1e-6 || v < 0 || v > bound(a, b)) ok = false;
        zi(a, b) = static_cast<int>(v);
      }
    }
    if (ok && zi(vac, vac) == 1) {
      const double residual = commutation_residual(md, zi);
      if (residual < 1e-8) found.push_back({zi, residual});
    }
    std::size_t i = 0;
    for (; i < axes.size(); ++i) {
      if (coeff[i] < axes[i].hi) {
        ++coeff[i];
        break;
      }
      coeff[i] = axes[i].lo;
    }
    if (i == axes.size()) break;
  }
  return found;
}

std::complex<double> partition_function(const ModularData& md, const InvariantMatrix& z,
                                        const std::vector<PuiseuxSeries>& chars,
                                        std::complex<double> tau, double tol) {
  if (chars.size() != md.size() || static_cast<std::size_t>(z.z.rows()) != md.size()) {
    fail(ErrorCode::InvalidArgument, "partition function: size mismatch");
  }
  const auto values = evaluate_all(chars, tau, tol);
  std::complex<double> sum = 0.0;
  for (Eigen::Index m = 0; m < z.z.rows(); ++m) {
    for (Eigen::Index k = 0; k < z.z.cols(); ++k) {
      if (z.z(m, k) != 0) {
        sum += static_cast<double>(z.z(m, k)) * values[static_cast<std::size_t>(m)] *
               std::conj(values[static_cast<std::size_t>(k)]);
      }
    }
  }
  return sum;
}

}  // namespace rcft
