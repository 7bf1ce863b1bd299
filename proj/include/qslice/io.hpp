#pragma once

// Text serialization (JSON) of series, matrices and approximation reports.
// Doubles are written in shortest round-trip form, so finite values survive
// a write/read cycle bit for bit.

#include <filesystem>
#include <string>
#include <string_view>

#include "qslice/hankel.hpp"
#include "qslice/nehari.hpp"
#include "qslice/slice_series.hpp"

namespace qslice::io {

/// {"coefficients": [{"n": .., "w": .., "x": .., "y": .., "z": ..}, ...]}
std::string series_to_text(const SliceLaurentSeries& f);
/// Accepts the object form above or a bare record array. Throws ParseError
/// naming the offending record.
SliceLaurentSeries series_from_text(std::string_view text);

SliceLaurentSeries read_series(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// {"rows": r, "cols": c, "entries": [[w, x, y, z], ...]} in row-major order.
std::string matrix_to_text(const QuaternionMatrix& m);
QuaternionMatrix matrix_from_text(std::string_view text);

/// Keys are the field names of ApproximationReport.
std::string report_to_text(const ApproximationReport& report);
ApproximationReport report_from_text(std::string_view text);

}  // namespace qslice::io
