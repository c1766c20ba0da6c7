#pragma once

#include <array>

namespace chidip {

/// Circular polarization label. The helicity sign is fixed per label:
/// s = +1 for LEFT (bound to n_left), s = -1 for RIGHT (bound to n_right).
enum class Polarization { Left, Right };

constexpr double helicity(Polarization p) { return p == Polarization::Left ? 1.0 : -1.0; }

inline constexpr std::array<Polarization, 2> kPolarizations{Polarization::Left,
                                                            Polarization::Right};

/// Reading of a chirality strength rho = "specific rotation divided by k".
enum class RotationMapping {
  HalfDifference,  ///< rho = (n_left - n_right) / 2   (default)
  FullDifference,  ///< rho =  n_left - n_right
};

/// Absorption-free optically active medium, characterized by the refractive
/// indices seen by the two circular polarizations.
class MediumChirality {
 public:
  /// Throws DomainError unless both indices are positive and finite.
  MediumChirality(double n_left, double n_right);

  static MediumChirality vacuum() { return {1.0, 1.0}; }
  static MediumChirality inactive(double n) { return {n, n}; }
  /// n_left/right = n_bar +- rho (HalfDifference) or n_bar +- rho/2 (FullDifference).
  static MediumChirality from_mean_and_rotation(
      double n_bar, double rho, RotationMapping mapping = RotationMapping::HalfDifference);

  double n_left() const { return n_left_; }
  double n_right() const { return n_right_; }
  double n_bar() const { return 0.5 * (n_left_ + n_right_); }
  double delta_n() const { return n_left_ - n_right_; }
  double index(Polarization p) const { return p == Polarization::Left ? n_left_ : n_right_; }

  bool operator==(const MediumChirality&) const = default;

 private:
  double n_left_;
  double n_right_;
};

}  // namespace chidip
