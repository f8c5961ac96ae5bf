#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rcft/modular_data.hpp"

namespace rcft {

/// Tolerance for rounding Verlinde sums to integers.
inline constexpr double kIntegerTolerance = 1e-6;

/// Largest genus or puncture count block_dimension accepts.
inline constexpr std::size_t kMaxSurfaceSize = 64;

/// Fusion coefficients N_{ab}^c, stored densely.
class FusionTensor {
 public:
  explicit FusionTensor(std::size_t rank) : rank_(rank), n_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }
  unsigned operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return n_[(a * rank_ + b) * rank_ + c];
  }
  unsigned& at(std::size_t a, std::size_t b, std::size_t c) {
    return n_[(a * rank_ + b) * rank_ + c];
  }
  const std::vector<unsigned>& data() const { return n_; }

  bool operator==(const FusionTensor&) const = default;

 private:
  std::size_t rank_;
  std::vector<unsigned> n_;
};

struct SurfaceSpec {
  std::size_t genus = 0;
  std::vector<std::size_t> punctures;
};

/// Verlinde's formula sum_P S_aP S_bP conj(S_cP) / S_vac,P rounded to an integer.
/// Throws Error(NonIntegral) when the sum is not within tol of a nonnegative integer.
unsigned verlinde_coefficient(const ModularData& md, std::size_t a, std::size_t b, std::size_t c,
                              double tol = kIntegerTolerance);

/// All coefficients, checked for commutativity, unit and associativity.
FusionTensor fusion_tensor(const ModularData& md, double tol = kIntegerTolerance);

/// Dimension of the space of chiral blocks on a genus-g surface with the given
/// puncture labels:
///   sum_P (prod_i S_{M^i P} / S_{vac P}) S_{vac P}^{2(1-g)}.
/// Outgoing punctures are not charge conjugated, so for non-self-conjugate data the
/// caller must conjugate them first.
std::uint64_t block_dimension(const ModularData& md, const SurfaceSpec& surface,
                              double tol = kIntegerTolerance);

/// S_{a,vac} / S_{vac,vac}.
double quantum_dimension(const ModularData& md, std::size_t a);

}  // namespace rcft
