#pragma once

#include "chidip/vec3.hpp"

namespace chidip {

/// Two-dipole configuration. All vectors are unit length; `r_hat` points
/// from dipole 2 to dipole 1, i.e. R = (r1 - r2) / |r1 - r2|. Flipping
/// `r_hat` flips the sign of the cross-product invariant and therefore
/// exchanges the roles of the two circular polarizations in the cross terms.
struct DipoleGeometry {
  Vec3 d1_hat;
  Vec3 d2_hat;
  Vec3 r_hat;
  double x = 1.0;  ///< dimensionless separation k0 R
};

/// The three scalar contractions through which the geometry enters every
/// closed-form coefficient.
struct GeometryInvariants {
  double a = 0.0;  ///< d2 . d1
  double b = 0.0;  ///< (d2 . R)(R . d1)
  double c = 0.0;  ///< (d2 x d1) . R
};

/// Normalizes the three vectors. Throws InvalidGeometry for a zero or
/// non-finite vector and InvalidSeparation for x <= 0.
DipoleGeometry normalize_geometry(const Vec3& d1, const Vec3& d2, const Vec3& axis, double x);

GeometryInvariants geometry_factors(const DipoleGeometry& g);

}  // namespace chidip
