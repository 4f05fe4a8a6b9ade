// Number formatting and table rendering shared by the CLI and the fixtures.
//
// Formatting rules: computed eigenvalues print with 8 decimals, approximation
// values with 12, relative errors in scientific notation with 6 digits after
// the point; values that are integers to within rounding print plainly, and a
// zero error prints as a bare 0. This mirrors the reference tables exactly.
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "magicspectra/spectra.hpp"

namespace magicspectra {

inline std::string format_fixed(double v, int decimals) {
  if (std::abs(v - std::round(v)) < 1e-9 * std::max(1.0, std::abs(v))) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(v)));
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::string format_mu(double v) { return format_fixed(v, 8); }
inline std::string format_lambda(double v) { return format_fixed(v, 12); }

inline std::string format_error(double v) {
  if (v == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

/// The three table columns for one order: one row per eigenvalue ascending,
/// mu0 row last.
struct TableRow {
  std::string mu;
  std::string lambda;
  std::string error;
};

inline std::vector<TableRow> spectrum_table_rows(const ErrorReport& rep) {
  std::vector<TableRow> rows;
  for (const auto& r : rep.rows) {
    TableRow row{format_mu(r.mu.real()), format_lambda(r.lambda),
                 format_error(r.rel_err)};
    if (r.complex_flagged)
      row.mu += (r.mu.imag() >= 0 ? "+" : "") + format_mu(r.mu.imag()) + "i";
    rows.push_back(std::move(row));
  }
  // exact values after the matched ones, mu0 last
  for (std::size_t s = rep.special_rows.size(); s-- > 1;) {
    const auto& r = rep.special_rows[s];
    rows.push_back({format_mu(r.mu.real()), format_lambda(r.lambda),
                    format_error(r.rel_err)});
  }
  const auto& mu0 = rep.special_rows.front();
  rows.push_back({format_mu(mu0.mu.real()), format_lambda(mu0.lambda), "0"});
  return rows;
}

}  // namespace magicspectra
