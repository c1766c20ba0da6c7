#include "chidip/output.hpp"

#include <array>
#include <charconv>

#include "json.hpp"

namespace chidip {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kPrecision = 14;  // digits after the point; 15 significant

double clean(double v) { return v == 0.0 ? 0.0 : v; }

void write_csv_line(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (const double v : values) {
    if (!first) os << ',';
    os << format_number(v);
    first = false;
  }
  os << '\n';
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), clean(v), std::chars_format::scientific,
                    kPrecision);
  return {buf.data(), res.ptr};
}

void write_sweep(std::ostream& os, std::span<const SweepRow> rows, OutputFormat fmt) {
  const bool absolute = !rows.empty() && rows.front().delta_plus.has_value();
  if (fmt == OutputFormat::Csv) {
    os << "x,gamma_s,gamma_as,delta,f1,f2,e_int";
    if (absolute) os << ",delta_plus,delta_minus";
    os << '\n';
    for (const auto& r : rows) {
      if (absolute) {
        write_csv_line(os, {r.x, r.gamma_s, r.gamma_as, r.delta, r.f1, r.f2, r.e_int,
                            *r.delta_plus, *r.delta_minus});
      } else {
        write_csv_line(os, {r.x, r.gamma_s, r.gamma_as, r.delta, r.f1, r.f2, r.e_int});
      }
    }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    o["x"] = clean(r.x);
    o["gamma_s"] = clean(r.gamma_s);
    o["gamma_as"] = clean(r.gamma_as);
    o["delta"] = clean(r.delta);
    o["f1"] = clean(r.f1);
    o["f2"] = clean(r.f2);
    o["e_int"] = clean(r.e_int);
    if (absolute) {
      o["delta_plus"] = clean(*r.delta_plus);
      o["delta_minus"] = clean(*r.delta_minus);
    }
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

void write_dynamics(std::ostream& os, std::span<const DynamicsRow> rows, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    os << "t,c1_sq,c2_sq,cplus_sq,cminus_sq,e_int\n";
    for (const auto& r : rows) {
      write_csv_line(os, {r.t, r.c1_sq, r.c2_sq, r.cplus_sq, r.cminus_sq, r.e_int});
    }
    return;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) {
    arr.push_back(ordered_json{{"t", clean(r.t)},
                               {"c1_sq", clean(r.c1_sq)},
                               {"c2_sq", clean(r.c2_sq)},
                               {"cplus_sq", clean(r.cplus_sq)},
                               {"cminus_sq", clean(r.cminus_sq)},
                               {"e_int", clean(r.e_int)}});
  }
  os << arr.dump(2) << '\n';
}

void write_lamb(std::ostream& os, const LambRow& r, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    os << "n_bar,lamb_cutoff,gamma_single,delta_lamb\n";
    write_csv_line(os, {r.n_bar, r.lamb_cutoff, r.gamma_single, r.delta_lamb});
    return;
  }
  const ordered_json o{{"n_bar", clean(r.n_bar)},
                       {"lamb_cutoff", clean(r.lamb_cutoff)},
                       {"gamma_single", clean(r.gamma_single)},
                       {"delta_lamb", clean(r.delta_lamb)}};
  os << o.dump(2) << '\n';
}

}  // namespace chidip
