#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "maxlp/experiments.hpp"
#include "maxlp/grid.hpp"
#include "maxlp/maximal.hpp"
#include "maxlp/spectral.hpp"

namespace maxlp {

// Shortest round-trip decimal form (%.17g).
std::string format_double(double v);

// GridFunction text format:
//   # period=<L> size=<M>
//   <x> <value>            (real)
//   <x> <re> <im>          (complex)
// One line per sample in index order. The reader validates the header, the
// line count, and that each x matches the grid abscissa; any violation is a
// config_error naming `what` and the 1-based line number.
void write_grid_function(const GridFunction& f, std::ostream& out);
void write_grid_function_file(const GridFunction& f, const std::string& path);
GridFunction read_grid_function(std::istream& in, const std::string& what);
GridFunction read_grid_function_file(const std::string& path);

// Scan table: one meta line
//   # name=<name> grid=<L,M> radii=<desc> tol=<tol> seed=<seed> profile=<p> version=<v>
// then optional "# note: ..." lines, a comma-joined column header, and one
// comma-joined row per line. Deterministic bytes for fixed inputs.
void write_scan_table(const ScanTable& table, std::ostream& out);
void write_scan_table_file(const ScanTable& table, const std::string& path);

// One JSON object per line: {"name","status","observed","bound","anchor",
// "context","grid","cap"}.
void write_check_reports(const std::vector<CheckReport>& reports, std::ostream& out);
void write_check_reports_file(const std::vector<CheckReport>& reports,
                              const std::string& path);

// JSON summary of a norm report: besov_part, l2_part, total, low_band,
// j_max, and the per-band sups.
std::string format_bnorm_report(const BNormReport& report);

// JSON sidecar for a maximal function run: radius set description, indices
// (when the set is small), the cap statement, and a histogram of witness
// radii. The values themselves go through write_grid_function.
std::string format_maximal_sidecar(const MaximalResult& result);

} // namespace maxlp
