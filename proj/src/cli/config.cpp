#include "chidip/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "chidip/error.hpp"

namespace chidip {
namespace {

using namespace std::string_view_literals;

constexpr std::string_view kSweepKeys[] = {"scenario"sv, "d1"sv,       "d2"sv,   "axis"sv,
                                           "n_left"sv,   "n_right"sv,  "n_bar"sv, "rotation"sv,
                                           "x"sv,        "time"sv,     "format"sv,
                                           "lamb_cutoff"sv};
constexpr std::string_view kLambKeys[] = {"n_left"sv,      "n_right"sv,       "n_bar"sv,
                                          "rotation"sv,    "lamb_cutoff"sv,   "wavelength_nm"sv,
                                          "format"sv};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string flag_name(std::string_view key) {
  std::string f = "--" + std::string(key);
  std::replace(f.begin(), f.end(), '_', '-');
  return f;
}

double parse_real(std::string_view key, std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw UsageError(flag_name(key) + ": expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

int parse_count(std::string_view key, std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(flag_name(key) + ": expected an integer point count, got '" +
                     std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

Vec3 parse_vector(std::string_view key, std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw UsageError(flag_name(key) + ": expected X,Y,Z, got '" + std::string(text) + "'");
  }
  return {parse_real(key, parts[0]), parse_real(key, parts[1]), parse_real(key, parts[2])};
}

// START:STOP:POINTS, START:STOP (default_points) or a single value.
SampleRange parse_range(std::string_view key, std::string_view text, int default_points,
                        bool allow_single) {
  const auto parts = split(text, ':');
  SampleRange r;
  if (parts.size() == 1 && allow_single) {
    r.start = r.stop = parse_real(key, parts[0]);
    r.points = 1;
    return r;
  }
  if (parts.size() != 2 && parts.size() != 3) {
    throw UsageError(flag_name(key) + ": expected START:STOP:POINTS, got '" + std::string(text) +
                     "'");
  }
  r.start = parse_real(key, parts[0]);
  r.stop = parse_real(key, parts[1]);
  r.points = parts.size() == 3 ? parse_count(key, parts[2]) : default_points;
  if (!(r.start < r.stop)) throw UsageError(flag_name(key) + ": START must be below STOP");
  if (r.points < 2) throw UsageError(flag_name(key) + ": POINTS must be at least 2");
  return r;
}

const std::string* find(const RawSettings& s, std::string_view key) {
  const auto it = s.find(std::string(key));
  return it == s.end() ? nullptr : &it->second;
}

MediumChirality resolve_medium(const RawSettings& s) {
  const auto* nl = find(s, "n_left");
  const auto* nr = find(s, "n_right");
  const auto* nb = find(s, "n_bar");
  const auto* rho = find(s, "rotation");
  try {
    if (nl || nr) {
      if (nb || rho) {
        throw UsageError("--n-left/--n-right cannot be combined with --n-bar/--rotation");
      }
      if (!nl || !nr) throw UsageError("--n-left and --n-right must be given together");
      return {parse_real("n_left", *nl), parse_real("n_right", *nr)};
    }
    const double n_bar = nb ? parse_real("n_bar", *nb) : 1.0;
    if (rho) return MediumChirality::from_mean_and_rotation(n_bar, parse_real("rotation", *rho));
    return MediumChirality::inactive(n_bar);
  } catch (const DomainError& e) {
    throw UsageError(std::string("invalid medium: ") + e.what());
  }
}

void resolve_orientation(const RawSettings& s, Scenario& scenario, Orientation& o) {
  const auto* name = find(s, "scenario");
  if (!name) throw UsageError("--scenario is required");
  const auto parsed = parse_scenario(trim(*name));
  if (!parsed) throw UsageError("--scenario: unknown scenario '" + *name + "'");
  scenario = *parsed;
  const auto* d1 = find(s, "d1");
  const auto* d2 = find(s, "d2");
  const auto* axis = find(s, "axis");
  if (scenario == Scenario::Custom) {
    if (!d1 || !d2 || !axis) throw UsageError("scenario 'custom' requires --d1, --d2 and --axis");
    o = {parse_vector("d1", *d1), parse_vector("d2", *d2), parse_vector("axis", *axis)};
    if (norm(o.d1) == 0.0 || norm(o.d2) == 0.0 || norm(o.axis) == 0.0) {
      throw UsageError("--d1, --d2 and --axis must be nonzero vectors");
    }
    return;
  }
  if (d1 || d2 || axis) {
    throw UsageError("--d1/--d2/--axis conflict with preset scenario '" + *name +
                     "'; use --scenario custom");
  }
  o = preset_orientation(scenario);
}

OutputFormat resolve_format(const RawSettings& s) {
  const auto* f = find(s, "format");
  if (!f) return OutputFormat::Csv;
  const auto v = trim(*f);
  if (v == "csv") return OutputFormat::Csv;
  if (v == "json") return OutputFormat::Json;
  throw UsageError("--format: expected csv or json, got '" + *f + "'");
}

std::optional<LambCutoff> resolve_cutoff(const RawSettings& s) {
  const auto* c = find(s, "lamb_cutoff");
  if (!c) return std::nullopt;
  try {
    return LambCutoff(parse_real("lamb_cutoff", *c));
  } catch (const DomainError& e) {
    throw UsageError(std::string("--lamb-cutoff: ") + e.what());
  }
}

}  // namespace

std::span<const std::string_view> known_keys(Command cmd) {
  if (cmd == Command::Lamb) return kLambKeys;
  return kSweepKeys;
}

RawSettings parse_config_text(std::string_view text, Command cmd) {
  const auto keys = known_keys(cmd);
  RawSettings out;
  int line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const auto where = "config line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw UsageError(where + ": expected key=value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw UsageError(where + ": unknown key '" + std::string(key) + "'");
    }
    if (!out.emplace(std::string(key), std::string(value)).second) {
      throw UsageError(where + ": duplicate key '" + std::string(key) + "'");
    }
  }
  return out;
}

RawSettings read_config_file(const std::filesystem::path& path, Command cmd) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), cmd);
}

RawSettings merge_settings(RawSettings file, const RawSettings& flags) {
  for (const auto& [k, v] : flags) file[k] = v;
  return file;
}

SweepRequest resolve_sweep(const RawSettings& s) {
  SweepRequest req;
  resolve_orientation(s, req.scenario, req.orientation);
  req.medium = resolve_medium(s);
  if (const auto* x = find(s, "x")) req.x = parse_range("x", *x, 200, false);
  if (!(req.x.start > 0.0)) throw UsageError("--x: separations must be positive");
  if (const auto* t = find(s, "time")) {
    req.time_sample = parse_real("time", *t);
    if (req.time_sample < 0.0) throw UsageError("--time must be non-negative");
  }
  req.format = resolve_format(s);
  req.lamb_cutoff = resolve_cutoff(s);
  return req;
}

DynamicsRequest resolve_dynamics(const RawSettings& s) {
  DynamicsRequest req;
  resolve_orientation(s, req.scenario, req.orientation);
  req.medium = resolve_medium(s);
  if (const auto* x = find(s, "x")) {
    if (x->find(':') != std::string::npos) {
      throw UsageError("--x: dynamics takes a single separation");
    }
    req.x = parse_real("x", *x);
  }
  if (!(req.x > 0.0)) throw UsageError("--x: separation must be positive");
  if (const auto* t = find(s, "time")) req.times = parse_range("time", *t, 101, true);
  if (req.times.start < 0.0) throw UsageError("--time must be non-negative");
  req.format = resolve_format(s);
  req.lamb_cutoff = resolve_cutoff(s);
  return req;
}

LambRequest resolve_lamb(const RawSettings& s) {
  LambRequest req;
  req.medium = resolve_medium(s);
  req.format = resolve_format(s);
  const auto* wl = find(s, "wavelength_nm");
  const auto cutoff = resolve_cutoff(s);
  if (wl && cutoff) throw UsageError("--lamb-cutoff and --wavelength-nm are mutually exclusive");
  if (cutoff) {
    req.cutoff = *cutoff;
  } else if (wl) {
    // Lambda = m_e c / (hbar k0) = m_e c^2 / (h c / wavelength)
    constexpr double kElectronRestEnergyEv = 510998.95000;
    constexpr double kPlanckTimesCEvNm = 1239.8419843320026;
    const double nm = parse_real("wavelength_nm", *wl);
    if (!(nm > 0.0)) throw UsageError("--wavelength-nm must be positive");
    try {
      req.cutoff = LambCutoff(kElectronRestEnergyEv / (kPlanckTimesCEvNm / nm));
    } catch (const DomainError& e) {
      throw UsageError(std::string("--wavelength-nm: ") + e.what());
    }
  } else {
    throw UsageError("lamb requires --lamb-cutoff or --wavelength-nm");
  }
  return req;
}

}  // namespace chidip
