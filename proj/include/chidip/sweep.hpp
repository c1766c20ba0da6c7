#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "chidip/collective.hpp"
#include "chidip/geometry.hpp"
#include "chidip/medium.hpp"
#include "chidip/vec3.hpp"

namespace chidip {

/// Orientation presets. All presets put the interdipole axis along z:
///  - OrthogonalPerpendicular: d1 = x, d2 = y (so (d2 x d1) . R = -1)
///  - SyntropicPerpendicular:  d1 = d2 = x
///  - Isotropic:               d1 = d2 = (1, 1, 1) / sqrt(3)
enum class Scenario { OrthogonalPerpendicular, SyntropicPerpendicular, Isotropic, Custom };

enum class OutputFormat { Csv, Json };

std::string_view scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(std::string_view name);

struct Orientation {
  Vec3 d1;
  Vec3 d2;
  Vec3 axis;
};

/// Throws UsageError for Scenario::Custom.
Orientation preset_orientation(Scenario s);

/// n uniformly spaced samples from start to stop inclusive.
struct SampleRange {
  double start = 0.0;
  double stop = 0.0;
  int points = 2;

  double at(int i) const;
};

struct SweepRequest {
  Scenario scenario = Scenario::Custom;
  MediumChirality medium = MediumChirality::vacuum();
  Orientation orientation;
  SampleRange x{0.5, 10.0, 200};
  double time_sample = 1.0;
  OutputFormat format = OutputFormat::Csv;
  std::optional<LambCutoff> lamb_cutoff;
};

/// One sample of a separation sweep. gamma_s/gamma_as are population damping
/// rates 2 gamma_+- / Gamma0, delta = (delta_+ - delta_-) / Gamma0 = 2 F2 and
/// e_int the interaction energy at the requested time. delta_plus/minus are
/// the absolute shifts, present only when a Lamb cutoff was supplied.
struct SweepRow {
  double x = 0.0;
  double gamma_s = 0.0;
  double gamma_as = 0.0;
  double delta = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double e_int = 0.0;
  std::optional<double> delta_plus;
  std::optional<double> delta_minus;
};

/// Throws UsageError for an invalid range (start <= 0, start >= stop, < 2 points)
/// or a negative time sample.
std::vector<SweepRow> run_sweep(const SweepRequest& req);

struct DynamicsRequest {
  Scenario scenario = Scenario::Custom;
  MediumChirality medium = MediumChirality::vacuum();
  Orientation orientation;
  double x = 1.0;
  SampleRange times{0.0, 5.0, 101};
  OutputFormat format = OutputFormat::Csv;
  std::optional<LambCutoff> lamb_cutoff;
};

struct DynamicsRow {
  double t = 0.0;
  double c1_sq = 0.0;
  double c2_sq = 0.0;
  double cplus_sq = 0.0;
  double cminus_sq = 0.0;
  double e_int = 0.0;
};

std::vector<DynamicsRow> run_dynamics(const DynamicsRequest& req);

struct LambRequest {
  MediumChirality medium = MediumChirality::vacuum();
  LambCutoff cutoff{2.0};
  OutputFormat format = OutputFormat::Csv;
};

struct LambRow {
  double n_bar = 0.0;
  double lamb_cutoff = 0.0;
  double gamma_single = 0.0;  ///< single-dipole population decay rate / Gamma0 = n_bar
  double delta_lamb = 0.0;    ///< renormalized Lamb shift / Gamma0
};

LambRow run_lamb(const LambRequest& req);

}  // namespace chidip
