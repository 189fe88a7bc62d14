#pragma once

#include <string>

#include "series.hpp"

namespace zeroacf {

// Reads a return series from CSV. Two layouts are accepted, switched on the
// header row:
//   date,close   -> per-day closing prices, converted to log-returns
//   return       -> log-returns, used as-is
// Extra columns are ignored. UTF-8, comma separated, header required.
ReturnSeries read_series_csv(const std::string& path, double zero_tolerance);

// Writes a single-column `return` CSV that read_series_csv accepts.
// Values are written with shortest round-trip formatting.
void write_returns_csv(const std::string& path, std::span<const double> returns);

} // namespace zeroacf
