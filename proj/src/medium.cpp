#include "chidip/medium.hpp"

#include <cmath>

#include "chidip/error.hpp"

namespace chidip {

MediumChirality::MediumChirality(double n_left, double n_right)
    : n_left_(n_left), n_right_(n_right) {
  if (!(n_left > 0.0) || !(n_right > 0.0) || !std::isfinite(n_left) || !std::isfinite(n_right)) {
    throw DomainError("refractive indices must be positive and finite");
  }
}

MediumChirality MediumChirality::from_mean_and_rotation(double n_bar, double rho,
                                                        RotationMapping mapping) {
  const double half = mapping == RotationMapping::HalfDifference ? rho : 0.5 * rho;
  return {n_bar + half, n_bar - half};
}

}  // namespace chidip
