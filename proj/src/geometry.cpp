#include "chidip/geometry.hpp"

#include <cmath>
#include <string>

#include "chidip/error.hpp"

namespace chidip {
namespace {

Vec3 unit(const Vec3& v, const char* name) {
  const double n = norm(v);
  if (!std::isfinite(n) || n == 0.0) {
    throw InvalidGeometry(std::string(name) + " must be a finite nonzero vector");
  }
  return v / n;
}

}  // namespace

DipoleGeometry normalize_geometry(const Vec3& d1, const Vec3& d2, const Vec3& axis, double x) {
  DipoleGeometry g{unit(d1, "d1"), unit(d2, "d2"), unit(axis, "axis"), x};
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw InvalidSeparation("separation x = k0 R must be positive and finite");
  }
  return g;
}

GeometryInvariants geometry_factors(const DipoleGeometry& g) {
  return {dot(g.d2_hat, g.d1_hat),
          dot(g.d2_hat, g.r_hat) * dot(g.r_hat, g.d1_hat),
          dot(cross(g.d2_hat, g.d1_hat), g.r_hat)};
}

}  // namespace chidip
