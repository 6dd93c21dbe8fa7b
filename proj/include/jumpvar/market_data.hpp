#pragma once

#include <string>
#include <vector>

#include "jumpvar/series.hpp"

namespace jumpvar {

struct LoadResult {
    std::vector<PriceSeries> series;   // one per price column, observed points only
    std::vector<std::string> warnings; // rejected rows, reported with row numbers
};

/// Reads a wide CSV panel: header row, column 1 `date` (YYYY-MM-DD), remaining
/// columns numeric prices, empty cell = missing. Rows with unparsable dates are
/// rejected and reported in `warnings`. Throws on missing file, duplicate date,
/// non-numeric price cell, or a file without data rows.
LoadResult load_prices(const std::string& path);

/// Fills gaps of `series` against `calendar` by linear interpolation in
/// calendar-day units: a missing day d between observations (a, p_a) and
/// (b, p_b) gets p_a + (p_b - p_a) * (d - a) / (b - a). Observed values pass
/// through unchanged. The calendar must not extend past the observed range;
/// extrapolation is an error.
PriceSeries interpolate_gaps(const PriceSeries& series, const std::vector<Date>& calendar);

/// returns[t] = ln(price[t+1] / price[t]); dates are the later endpoints.
ReturnSeries log_returns(const PriceSeries& series);

/// Assembles loaded per-asset series into a gap-free panel: the calendar is the
/// union of observed dates, each asset is interpolated over its own observed
/// range, and the result is truncated to the common overlapping window.
Panel build_panel(const std::vector<PriceSeries>& series);

/// Writes a panel in the same wide CSV schema as the input (9 significant digits).
void write_panel_csv(const Panel& panel, const std::string& path);

Panel read_panel_csv(const std::string& path);

}  // namespace jumpvar
