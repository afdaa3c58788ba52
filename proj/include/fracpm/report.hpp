#pragma once

// Verification report rows and CSV output (17 significant digits).

#include "fracpm/evolve.hpp"

#include <string>
#include <vector>

namespace fracpm::report {

enum class Compare {
  within,    // |measured - expected| <= tolerance
  at_most,   // measured <= expected + tolerance
  at_least,  // measured >= expected - tolerance
};

struct ReportRow {
  std::string check_id;
  std::string paper_anchor;  // drawn from anchor_registry()
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Fixed list of result names a row may point at.
const std::vector<std::string>& anchor_registry();

/// Builds a row and evaluates pass. Throws std::invalid_argument when the
/// anchor is not registered. Non-finite measurements fail.
ReportRow make_row(std::string check_id, std::string anchor, double measured, double expected, double tolerance,
                   Compare cmp = Compare::within);

bool all_pass(const std::vector<ReportRow>& rows);

/// %.17g, with "inf", "-inf" and "nan" spelled out.
std::string format_number(double x);

std::string rows_csv(const std::vector<ReportRow>& rows);
/// Fixed-width table for terminals: id, measured, expected, tolerance, PASS/FAIL.
std::string rows_table(const std::vector<ReportRow>& rows);

/// Parses a file produced from rows_csv. Check ids containing commas are
/// double-quoted.
std::vector<ReportRow> read_rows(const std::string& path);

/// Column name of p in diag.csv: p1, p2, p1.5, pinf.
std::string p_column(double p);

std::string diag_csv(const std::vector<evolve::DiagnosticsRecord>& records, const std::vector<double>& p_list);

/// 1-D: "x,u"; 2-D: "x,y,u", row-major.
std::string field_csv(const Field& f);

/// u_<t>.csv with t in shortest round-trip form.
std::string snapshot_filename(double t);

/// Writes text to path, throwing std::runtime_error naming the path on failure.
void write_text(const std::string& path, const std::string& text);

}  // namespace fracpm::report
