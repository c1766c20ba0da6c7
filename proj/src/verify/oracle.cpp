#include "chidip/verify/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "chidip/error.hpp"
#include "chidip/verify/quadrature.hpp"

namespace chidip::verify {
namespace {

using cdouble = std::complex<double>;

void set_outer(ComplexMatrix3& m, const Vec3& a, const Vec3& b, cdouble scale) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] += scale * (a[i] * b[j]);
  }
}

// Orthonormal (p, q) with q = axis x p, so (p, q, axis) is right-handed.
std::pair<Vec3, Vec3> transverse_basis(const Vec3& axis) {
  const Vec3 helper = std::abs(axis.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  Vec3 p = helper - axis * dot(helper, axis);
  p = p / norm(p);
  return {p, cross(axis, p)};
}

// phi-averaged contraction d2 . M_p . d1 at every polar node, for one rule.
struct PolarProfile {
  GaussRule rule;
  std::vector<cdouble> profile[2];
};

PolarProfile polar_profile(const DipoleGeometry& g, int n_polar, int n_azimuthal,
                           const FrameOptions& frame) {
  PolarProfile out{gauss_legendre(n_polar), {}};
  const auto [p_axis, q_axis] = transverse_basis(g.r_hat);
  std::mt19937_64 rng(frame.frame_rotation_seed.value_or(0) ^
                      (static_cast<std::uint64_t>(n_polar) << 32U) ^
                      static_cast<std::uint64_t>(n_azimuthal));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (auto& v : out.profile) v.resize(static_cast<std::size_t>(n_polar));
  for (int i = 0; i < n_polar; ++i) {
    const double mu = out.rule.nodes[static_cast<std::size_t>(i)];
    const double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    CompensatedSum<cdouble> acc[2];
    for (int j = 0; j < n_azimuthal; ++j) {
      const double phi = 2.0 * std::numbers::pi * (j + 0.5) / n_azimuthal;
      const double cp = std::cos(phi);
      const double sp = std::sin(phi);
      const Vec3 radial = p_axis * cp + q_axis * sp;
      const Vec3 k_hat = radial * st + g.r_hat * mu;
      Vec3 e1 = radial * mu - g.r_hat * st;  // theta-hat
      Vec3 e2 = q_axis * cp - p_axis * sp;   // phi-hat
      if (frame.frame_rotation_seed) {
        const double alpha = angle(rng);
        const Vec3 r1 = e1 * std::cos(alpha) + e2 * std::sin(alpha);
        const Vec3 r2 = e2 * std::cos(alpha) - e1 * std::sin(alpha);
        e1 = r1;
        e2 = r2;
      }
      for (int pol = 0; pol < 2; ++pol) {
        const auto sample = mode_dyadic(k_hat, e1, e2, kPolarizations[pol]);
        acc[pol].add(contract(g.d2_hat, sample.m_dyadic, g.d1_hat));
      }
    }
    for (int pol = 0; pol < 2; ++pol) {
      out.profile[pol][static_cast<std::size_t>(i)] = acc[pol].value() / double(n_azimuthal);
    }
  }
  return out;
}

cdouble average_from_profile(const PolarProfile& prof, int pol, double u) {
  CompensatedSum<cdouble> acc;
  const auto& rule = prof.rule;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double ph = u * rule.nodes[i];
    acc.add(0.5 * rule.weights[i] * prof.profile[pol][i] * cdouble(std::cos(ph), std::sin(ph)));
  }
  return acc.value();
}

int pol_index(Polarization p) { return p == Polarization::Left ? 0 : 1; }

}  // namespace

void SphericalQuadratureSpec::validate() const {
  if (n_polar < 8 || n_azimuthal < 16 || n_polar % 2 != 0 || n_azimuthal % 2 != 0 ||
      n_polar * n_azimuthal < 128) {
    throw std::invalid_argument(
        "spherical quadrature needs even node counts, n_polar >= 8 and n_azimuthal >= 16");
  }
}

ModeDyadicSample mode_dyadic(const Vec3& k_hat, const Vec3& e1_hat, const Vec3& e2_hat,
                             Polarization p) {
  ModeDyadicSample s{k_hat, e1_hat, e2_hat, {}};
  const cdouble chiral(0.0, helicity(p));
  set_outer(s.m_dyadic, e1_hat, e1_hat, 1.0);
  set_outer(s.m_dyadic, e2_hat, e2_hat, 1.0);
  set_outer(s.m_dyadic, e1_hat, e2_hat, chiral);
  set_outer(s.m_dyadic, e2_hat, e1_hat, -chiral);
  return s;
}

cdouble contract(const Vec3& left, const ComplexMatrix3& m, const Vec3& right) {
  cdouble sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) sum += left[i] * m[i][j] * right[j];
  }
  return sum;
}

std::complex<double> dyadic_phase_average(const DipoleGeometry& g, Polarization p, double u,
                                          const SphericalQuadratureSpec& q,
                                          const FrameOptions& frame) {
  q.validate();
  const auto prof = polar_profile(g, q.n_polar, q.n_azimuthal, frame);
  return average_from_profile(prof, pol_index(p), u);
}

double calibration_constant(const SphericalQuadratureSpec& q) {
  const DipoleGeometry parallel{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 1.0}, 1.0};
  return 1.0 / (4.0 * dyadic_phase_average(parallel, Polarization::Left, 0.0, q).real());
}

OracleResult f1_oracle(double x, const MediumChirality& m, const DipoleGeometry& g,
                       const SphericalQuadratureSpec& q, double tolerance,
                       const FrameOptions& frame) {
  if (!(x > 0.0)) throw InvalidSeparation("oracle requires x > 0");
  const auto evaluate = [&](const SphericalQuadratureSpec& spec, double& imag) {
    spec.validate();
    const double kappa = calibration_constant(spec);
    const auto prof = polar_profile(g, spec.n_polar, spec.n_azimuthal, frame);
    cdouble total = 0.0;
    for (const auto p : kPolarizations) {
      const double n = m.index(p);
      total += kappa * n * average_from_profile(prof, pol_index(p), n * x);
    }
    imag = std::abs(total.imag());
    return total.real();
  };
  double imag_base = 0.0;
  double imag_fine = 0.0;
  const double base = evaluate(q, imag_base);
  const double fine = evaluate(q.refined(), imag_fine);
  const double delta = std::abs(fine - base);
  if (!(delta <= tolerance)) {
    throw OracleDivergence("f1 oracle: refinement changed the result by " +
                           std::to_string(delta));
  }
  return {fine, delta, imag_fine};
}

double radial_window(double t, double flat) {
  if (t <= flat) return 1.0;
  if (t >= 1.0) return 0.0;
  const double s = (t - flat) / (1.0 - flat);
  const double rise = std::exp(-1.0 / (1.0 - s));
  const double fall = std::exp(-1.0 / s);
  return rise / (rise + fall);
}

RadialSpec RadialSpec::refined() const {
  RadialSpec r = *this;
  r.window_phase *= 1.5;
  r.panel_phase *= 0.5;
  return r;
}

namespace {

// One polarization's (P int_0^inf  G(xi) [1/(xi-1) + 1/(xi+1)] dxi) with
// G(xi) = xi^3 S(xi) chi(xi / Lambda).
cdouble radial_integral(const DipoleGeometry& g, int pol, double u0,
                        const SphericalQuadratureSpec& q, const RadialSpec& r,
                        const FrameOptions& frame) {
  const double h = r.pole_half_width;
  const double lambda = std::max(r.window_phase / u0, (2.0 + h) / r.flat_fraction);
  std::map<int, PolarProfile> profiles;
  const auto spectral = [&](double xi) -> cdouble {
    const double u = u0 * xi;
    int n = static_cast<int>(std::ceil(0.5 * u + 0.5 * q.n_polar + 8.0));
    n = std::max(q.n_polar, (n + 7) / 8 * 8);
    auto it = profiles.find(n);
    if (it == profiles.end()) {
      it = profiles.emplace(n, polar_profile(g, n, q.n_azimuthal, frame)).first;
    }
    return xi * xi * xi * average_from_profile(it->second, pol, u) *
           radial_window(xi / lambda, r.flat_fraction);
  };
  const auto panel_rule = gauss_legendre(r.nodes_per_panel);
  CompensatedSum<cdouble> acc;
  const auto panels = [&](double a, double b, auto&& body) {
    const int count = std::max(8, static_cast<int>(std::ceil(u0 * (b - a) / r.panel_phase)));
    const double width = (b - a) / count;
    for (int k = 0; k < count; ++k) {
      const double lo = a + k * width;
      for (std::size_t i = 0; i < panel_rule.nodes.size(); ++i) {
        const double t = lo + 0.5 * width * (panel_rule.nodes[i] + 1.0);
        acc.add(0.5 * width * panel_rule.weights[i] * body(t));
      }
    }
  };
  const auto both_branches = [&](double xi) {
    return spectral(xi) * (1.0 / (xi - 1.0) + 1.0 / (xi + 1.0));
  };
  panels(0.0, 1.0 - h, both_branches);
  // Mirrored nodes xi = 1 +- t: the resonant branch becomes (G(1+t) - G(1-t)) / t.
  panels(0.0, h, [&](double t) {
    const cdouble above = spectral(1.0 + t);
    const cdouble below = spectral(1.0 - t);
    return (above - below) / t + above / (2.0 + t) + below / (2.0 - t);
  });
  panels(1.0 + h, lambda, both_branches);
  return acc.value();
}

double relative_scale(double v) { return std::max(std::abs(v), 0.01); }

}  // namespace

OracleResult f2_oracle(double x, const MediumChirality& m, const DipoleGeometry& g,
                       const SphericalQuadratureSpec& q, const RadialSpec& radial) {
  if (!(x > 0.0)) throw InvalidSeparation("oracle requires x > 0");
  const auto evaluate = [&](const SphericalQuadratureSpec& spec, const RadialSpec& r,
                            double& imag) {
    spec.validate();
    const double kappa = calibration_constant(spec);
    cdouble total = 0.0;
    for (const auto p : kPolarizations) {
      const double n = m.index(p);
      total += kappa * n / std::numbers::pi *
               radial_integral(g, pol_index(p), n * x, spec, r, FrameOptions{});
    }
    imag = std::abs(total.imag());
    return total.real();
  };
  double imag_base = 0.0;
  double imag_fine = 0.0;
  const double base = evaluate(q, radial, imag_base);
  const double fine = evaluate(q.refined(), radial.refined(), imag_fine);
  const double delta = std::abs(fine - base);
  if (!(delta <= radial.tolerance * relative_scale(fine))) {
    throw OracleDivergence("f2 oracle: refinement changed the result by " +
                           std::to_string(delta));
  }
  return {fine, delta, imag_fine};
}

}  // namespace chidip::verify
