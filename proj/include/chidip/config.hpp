#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chidip/sweep.hpp"

namespace chidip {

enum class Command { Sweep, Dynamics, Lamb };

/// Settings keyed by flag name with '-' replaced by '_' (e.g. "n_left").
using RawSettings = std::map<std::string, std::string>;

/// Keys accepted by a command, in flag order.
std::span<const std::string_view> known_keys(Command cmd);

/// Parses flat `key = value` text; `#` starts a comment. Unknown keys,
/// duplicate keys and lines without '=' raise UsageError naming the line.
RawSettings parse_config_text(std::string_view text, Command cmd);
RawSettings read_config_file(const std::filesystem::path& path, Command cmd);

/// Overlays `flags` on `file` (flags win).
RawSettings merge_settings(RawSettings file, const RawSettings& flags);

SweepRequest resolve_sweep(const RawSettings& s);
DynamicsRequest resolve_dynamics(const RawSettings& s);
LambRequest resolve_lamb(const RawSettings& s);

/// Parses `sweep` flags (without the command word), including an optional
/// --config file, into a fully resolved request. Throws UsageError.
SweepRequest parse_config(const std::vector<std::string>& args);

}  // namespace chidip
