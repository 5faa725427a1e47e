////////////////////////////////////////////////////////////////////////////////
// io.hpp
//
// File formats:
//   boundary JSON     {"fourier": {"k": [re, im], ...}} | {"samples": [[re, im], ...]}
//   coefficient JSON  {"alpha": number, "coeffs": {"k": [re, im], ...}}
//   field CSV         x,y,f_re,f_im,fz_re,fz_im,fzbar_re,fzbar_im
//   report JSON       {theorem_id, grid, tolerance, worst_slack, violations, passed}
//
// Floating point is serialized with 17 significant digits, so a written
// field re-reads bit-exactly.
////////////////////////////////////////////////////////////////////////////////
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "alphakit/analysis.hpp"
#include "alphakit/boundary.hpp"
#include "alphakit/series.hpp"

namespace alphakit::io {

/// Shortest-lossless decimal form of a double (17 significant digits).
std::string format_double(double v);

struct FieldRow {
  double x = 0.0, y = 0.0;
  Complex f, fz, fzbar;
};

void write_field_csv(std::ostream& out, const std::vector<FieldRow>& rows);
std::vector<FieldRow> read_field_csv(std::istream& in);
void write_field_csv_file(const std::string& path, const std::vector<FieldRow>& rows);
std::vector<FieldRow> read_field_csv_file(const std::string& path);

solver::BoundaryData parse_boundary_json(const std::string& text);
solver::BoundaryData read_boundary_json_file(const std::string& path);

series::AlphaHarmonicSeries parse_series_json(const std::string& text);
series::AlphaHarmonicSeries read_series_json_file(const std::string& path);
std::string series_to_json(const series::AlphaHarmonicSeries& s);

std::string report_to_json(const analysis::VerificationReport& report);
analysis::VerificationReport parse_report_json(const std::string& text);

}  // namespace alphakit::io
