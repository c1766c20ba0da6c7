#pragma once

#include <ostream>
#include <span>
#include <string>

#include "chidip/sweep.hpp"

namespace chidip {

/// Locale-independent scientific notation with 15 significant digits.
/// Negative zero prints as zero.
std::string format_number(double v);

void write_sweep(std::ostream& os, std::span<const SweepRow> rows, OutputFormat fmt);
void write_dynamics(std::ostream& os, std::span<const DynamicsRow> rows, OutputFormat fmt);
void write_lamb(std::ostream& os, const LambRow& row, OutputFormat fmt);

}  // namespace chidip
