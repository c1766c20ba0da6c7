#include "chidip/cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "chidip/config.hpp"
#include "chidip/error.hpp"
#include "chidip/output.hpp"

namespace chidip {
namespace {

constexpr std::string_view kUsage =
    "usage: chidip <command> [flags]\n"
    "\n"
    "commands:\n"
    "  sweep     collective rates, shifts and interaction energy over a separation range\n"
    "  dynamics  populations and interaction energy over a time grid at one separation\n"
    "  lamb      renormalized single-dipole Lamb shift\n"
    "\n"
    "run 'chidip <command> --help' for the flags of a command\n";

std::string description(std::string_view key) {
  if (key == "scenario")
    return "orthogonal-perpendicular | syntropic-perpendicular | isotropic | custom";
  if (key == "d1") return "dipole 1 orientation X,Y,Z (custom scenario)";
  if (key == "d2") return "dipole 2 orientation X,Y,Z (custom scenario)";
  if (key == "axis") return "interdipole axis X,Y,Z pointing from dipole 2 to 1 (custom)";
  if (key == "n_left") return "refractive index for left circular polarization";
  if (key == "n_right") return "refractive index for right circular polarization";
  if (key == "n_bar") return "mean refractive index (default 1)";
  if (key == "rotation") return "chirality rho = (n_left - n_right)/2, used with --n-bar";
  if (key == "x") return "separation k0R: START:STOP:POINTS for sweep, a value for dynamics";
  if (key == "time") return "time in 1/Gamma0: sample for sweep, START:STOP:POINTS for dynamics";
  if (key == "format") return "csv | json";
  if (key == "lamb_cutoff") return "Bethe cutoff m_e c/(hbar k0); adds absolute level shifts";
  if (key == "wavelength_nm") return "transition wavelength in nm; derives the Lamb cutoff";
  return {};
}

struct Invocation {
  RawSettings settings;
  bool help = false;
  std::string help_text;
};

Invocation collect(Command cmd, std::string_view name, const std::vector<std::string>& args) {
  CLI::App app{"chidip " + std::string(name), "chidip " + std::string(name)};
  app.set_help_flag("-h,--help", "print this help");
  const auto keys = known_keys(cmd);
  std::vector<std::string> values(keys.size());
  std::vector<CLI::Option*> options(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::string flag = "--" + std::string(keys[i]);
    std::replace(flag.begin(), flag.end(), '_', '-');
    options[i] = app.add_option(flag, values[i], description(keys[i]));
  }
  std::string config_path;
  auto* config = app.add_option("--config", config_path, "flat key=value file; flags win");

  Invocation inv;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    inv.help = true;
    inv.help_text = app.help();
    return inv;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  RawSettings flags;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (options[i]->count() > 0) flags[std::string(keys[i])] = values[i];
  }
  RawSettings file;
  if (config->count() > 0) file = read_config_file(config_path, cmd);
  inv.settings = merge_settings(std::move(file), flags);
  return inv;
}

}  // namespace

SweepRequest parse_config(const std::vector<std::string>& args) {
  auto inv = collect(Command::Sweep, "sweep", args);
  if (inv.help) throw UsageError("help requested");
  return resolve_sweep(inv.settings);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return 2;
  }
  const std::string& name = args.front();
  if (name == "-h" || name == "--help" || name == "help") {
    out << kUsage;
    return 0;
  }
  Command cmd;
  if (name == "sweep") {
    cmd = Command::Sweep;
  } else if (name == "dynamics") {
    cmd = Command::Dynamics;
  } else if (name == "lamb") {
    cmd = Command::Lamb;
  } else {
    err << "chidip: error: unknown command '" << name << "'\n" << kUsage;
    return 2;
  }
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  std::ostringstream buffer;
  try {
    const auto inv = collect(cmd, name, rest);
    if (inv.help) {
      out << inv.help_text;
      return 0;
    }
    switch (cmd) {
      case Command::Sweep: {
        const auto req = resolve_sweep(inv.settings);
        write_sweep(buffer, run_sweep(req), req.format);
        break;
      }
      case Command::Dynamics: {
        const auto req = resolve_dynamics(inv.settings);
        write_dynamics(buffer, run_dynamics(req), req.format);
        break;
      }
      case Command::Lamb: {
        const auto req = resolve_lamb(inv.settings);
        write_lamb(buffer, run_lamb(req), req.format);
        break;
      }
    }
  } catch (const UsageError& e) {
    err << "chidip: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "chidip: error: " << e.what() << '\n';
    return 1;
  }
  out << buffer.str();
  out.flush();
  return out ? 0 : 1;
}

}  // namespace chidip
