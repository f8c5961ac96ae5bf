#include "rcft/fusion.hpp"

#include <cmath>
#include <string>

#include "rcft/error.hpp"

namespace rcft {

namespace {

std::uint64_t round_checked(Complex value, double tol, const char* what) {
  const double nearest = std::round(value.real());
  if (std::abs(value - Complex(nearest, 0.0)) > tol || nearest < 0.0) {
    fail(ErrorCode::NonIntegral, std::string("non-integral ") + what + " (value " +
                                     std::to_string(value.real()) + (value.imag() < 0 ? "" : "+") +
                                     std::to_string(value.imag()) + "i)");
  }
  if (nearest >= 9007199254740992.0) {
    fail(ErrorCode::Domain, std::string(what) + " exceeds the exactly representable range");
  }
  return static_cast<std::uint64_t>(nearest);
}

Complex integer_power(Complex base, int exponent) {
  Complex result = 1.0;
  Complex factor = exponent < 0 ? 1.0 / base : base;
  for (int e = exponent < 0 ? -exponent : exponent; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

void check_label(const ModularData& md, std::size_t a) {
  if (a >= md.size()) fail(ErrorCode::InvalidArgument, "label index out of range");
}

}  // namespace

unsigned verlinde_coefficient(const ModularData& md, std::size_t a, std::size_t b, std::size_t c,
                              double tol) {
  check_label(md, a);
  check_label(md, b);
  check_label(md, c);
  const auto& s = md.s();
  const auto vac = static_cast<Eigen::Index>(md.vacuum());
  Complex sum = 0.0;
  for (Eigen::Index p = 0; p < s.cols(); ++p) {
    sum += s(static_cast<Eigen::Index>(a), p) * s(static_cast<Eigen::Index>(b), p) *
           std::conj(s(static_cast<Eigen::Index>(c), p)) / s(vac, p);
  }
  return static_cast<unsigned>(round_checked(sum, tol, "Verlinde output"));
}

FusionTensor fusion_tensor(const ModularData& md, double tol) {
  const std::size_t n = md.size();
  FusionTensor t(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) t.at(a, b, c) = verlinde_coefficient(md, a, b, c, tol);
    }
  }

  const std::size_t vac = md.vacuum();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (t(vac, a, b) != (a == b ? 1u : 0u)) {
        fail(ErrorCode::Internal, "fusion tensor: vacuum is not the unit");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (t(a, b, c) != t(b, a, c)) fail(ErrorCode::Internal, "fusion tensor not commutative");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          unsigned long lhs = 0;
          unsigned long rhs = 0;
          for (std::size_t e = 0; e < n; ++e) {
            lhs += static_cast<unsigned long>(t(a, b, e)) * t(e, c, d);
            rhs += static_cast<unsigned long>(t(b, c, e)) * t(a, e, d);
          }
          if (lhs != rhs) fail(ErrorCode::Internal, "fusion tensor not associative");
        }
      }
    }
  }
  return t;
}

std::uint64_t block_dimension(const ModularData& md, const SurfaceSpec& surface, double tol) {
  if (surface.genus > kMaxSurfaceSize || surface.punctures.size() > kMaxSurfaceSize) {
    fail(ErrorCode::Limit, "genus and puncture count are capped at " +
                               std::to_string(kMaxSurfaceSize));
  }
  for (auto m : surface.punctures) check_label(md, m);
  const auto& s = md.s();
  const auto vac = static_cast<Eigen::Index>(md.vacuum());
  const int power = 2 * (1 - static_cast<int>(surface.genus));
  Complex sum = 0.0;
  for (Eigen::Index p = 0; p < s.cols(); ++p) {
    Complex term = integer_power(s(vac, p), power);
    for (auto m : surface.punctures) term *= s(static_cast<Eigen::Index>(m), p) / s(vac, p);
    sum += term;
  }
  return round_checked(sum, tol, "dimension");
}

double quantum_dimension(const ModularData& md, std::size_t a) {
  check_label(md, a);
  const auto vac = static_cast<Eigen::Index>(md.vacuum());
  return (md.s()(static_cast<Eigen::Index>(a), vac) / md.s()(vac, vac)).real();
}

}  // namespace rcft
