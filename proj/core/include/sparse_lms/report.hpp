#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>

#include "sparse_lms/experiment.hpp"

namespace sparse_lms {

/// Shortest decimal form that still reads back to the same double (17 significant digits).
std::string format_double(double v);

/// Writes `algorithm,sr_numerator,sr_denominator,iteration,msd` rows, one per
/// (curve, iteration), ordered by (algorithm, sparsity, iteration). Iterations are
/// numbered from 1: row k holds the MSD after k updates.
void write_csv(std::span<const MsdCurve> curves, std::ostream& out);
void emit_csv(std::span<const MsdCurve> curves, const std::filesystem::path& out);

/// Floor applied before taking 10*log10 in dB plots.
inline constexpr double kDbFloor = 1e-300;

double to_db(double msd);

/// Self-contained SVG with one subplot per sparsity level (two per row) and one
/// polyline per curve. Throws ParameterError on an empty curve list.
std::string render_svg(std::span<const MsdCurve> curves, bool db_scale);
void emit_plot(std::span<const MsdCurve> curves, const std::filesystem::path& out, bool db_scale);

/// Fixed-width table of steady-state means and standard errors.
void write_summary(std::span<const SteadyStateSummary> rows, std::ostream& out);

}  // namespace sparse_lms
