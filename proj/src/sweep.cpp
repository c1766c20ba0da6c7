#include "chidip/sweep.hpp"

#include <cmath>
#include <string>

#include "chidip/dynamics.hpp"
#include "chidip/error.hpp"

namespace chidip {
namespace {

constexpr std::pair<Scenario, std::string_view> kScenarioNames[] = {
    {Scenario::OrthogonalPerpendicular, "orthogonal-perpendicular"},
    {Scenario::SyntropicPerpendicular, "syntropic-perpendicular"},
    {Scenario::Isotropic, "isotropic"},
    {Scenario::Custom, "custom"},
};

void validate_range(const SampleRange& r, const char* what, bool allow_zero_start) {
  const bool start_ok = allow_zero_start ? r.start >= 0.0 : r.start > 0.0;
  if (!start_ok || !std::isfinite(r.start) || !std::isfinite(r.stop)) {
    throw UsageError(std::string(what) + " range start must be " +
                     (allow_zero_start ? "non-negative" : "positive"));
  }
  if (r.points < 1) throw UsageError(std::string(what) + " range needs at least one point");
  if (r.points > 1 && !(r.start < r.stop)) {
    throw UsageError(std::string(what) + " range needs start < stop");
  }
}

GeometryInvariants invariants_for(const Orientation& o, double x) {
  return geometry_factors(normalize_geometry(o.d1, o.d2, o.axis, x));
}

}  // namespace

std::string_view scenario_name(Scenario s) {
  for (const auto& [value, name] : kScenarioNames) {
    if (value == s) return name;
  }
  return "custom";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (const auto& [value, n] : kScenarioNames) {
    if (n == name) return value;
  }
  return std::nullopt;
}

Orientation preset_orientation(Scenario s) {
  constexpr Vec3 ex{1.0, 0.0, 0.0};
  constexpr Vec3 ey{0.0, 1.0, 0.0};
  constexpr Vec3 ez{0.0, 0.0, 1.0};
  switch (s) {
    case Scenario::OrthogonalPerpendicular:
      return {ex, ey, ez};
    case Scenario::SyntropicPerpendicular:
      return {ex, ex, ez};
    case Scenario::Isotropic: {
      const Vec3 diag = Vec3{1.0, 1.0, 1.0} / std::sqrt(3.0);
      return {diag, diag, ez};
    }
    case Scenario::Custom:
      break;
  }
  throw UsageError("scenario 'custom' has no preset orientation");
}

double SampleRange::at(int i) const {
  if (points == 1) return start;
  if (i == points - 1) return stop;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

std::vector<SweepRow> run_sweep(const SweepRequest& req) {
  validate_range(req.x, "x", false);
  if (req.x.points < 2) throw UsageError("x range needs at least two points");
  if (!(req.time_sample >= 0.0) || !std::isfinite(req.time_sample)) {
    throw UsageError("time sample must be non-negative");
  }
  const double a_l = a_l_damping(req.medium);
  const std::array<double, 1> t{req.time_sample};
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(req.x.points));
  for (int i = 0; i < req.x.points; ++i) {
    const double x = req.x.at(i);
    const auto g = invariants_for(req.orientation, x);
    const auto spec = collective_spectrum(x, req.medium, g, req.lamb_cutoff);
    const std::complex<double> at{-spec.f1, spec.f2};
    const auto traj = evolve(a_l, at, t);
    SweepRow row{x,      2.0 * spec.gamma_plus, 2.0 * spec.gamma_minus, spec.delta, spec.f1,
                 spec.f2, traj.e_int[0],        std::nullopt,           std::nullopt};
    if (req.lamb_cutoff) {
      row.delta_plus = spec.delta_plus;
      row.delta_minus = spec.delta_minus;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<DynamicsRow> run_dynamics(const DynamicsRequest& req) {
  validate_range(req.times, "time", true);
  const auto g = invariants_for(req.orientation, req.x);
  const auto coeffs = rate_coefficients(req.x, req.medium, g, req.lamb_cutoff);
  std::vector<double> times(static_cast<std::size_t>(req.times.points));
  for (int i = 0; i < req.times.points; ++i) times[static_cast<std::size_t>(i)] = req.times.at(i);
  const auto traj = evolve(coeffs.a_l, coeffs.a_t, times);
  std::vector<DynamicsRow> rows(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    rows[i] = {traj.times[i],           std::norm(traj.c1[i]),      std::norm(traj.c2[i]),
               std::norm(traj.c_plus[i]), std::norm(traj.c_minus[i]), traj.e_int[i]};
  }
  return rows;
}

LambRow run_lamb(const LambRequest& req) {
  return {req.medium.n_bar(), req.cutoff.value(), req.medium.n_bar(),
          lamb_shift(req.medium, req.cutoff)};
}

}  // namespace chidip
