#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zeroacf {

// One row of a daily closing-price table. Dates are kept as ISO-8601
// strings; lexicographic order equals calendar order for that format.
struct PriceRow {
    std::string date;
    double close = 0.0;
};

// Ordered price history. Construction validates: at least strictly
// increasing dates and strictly positive, finite closes.
class PriceTable {
public:
    explicit PriceTable(std::vector<PriceRow> rows);

    const std::vector<PriceRow>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

private:
    std::vector<PriceRow> rows_;
};

// Daily log-returns r_1..r_n with the derived zero/non-zero indicator
// a_t (a_t = 0 iff |r_t| <= zero_tolerance). Immutable after construction.
class ReturnSeries {
public:
    static ReturnSeries from_returns(std::vector<double> values, double zero_tolerance = 0.0);

    // r_t = ln(close_t) - ln(close_{t-1}); needs at least two rows.
    static ReturnSeries from_prices(const PriceTable& table, double zero_tolerance = 0.0);

    std::span<const double> values() const noexcept { return values_; }
    std::span<const std::uint8_t> indicator() const noexcept { return indicator_; }
    std::size_t size() const noexcept { return values_.size(); }
    double zero_tolerance() const noexcept { return zero_tolerance_; }

    // 1 - n^{-1} sum a_t.
    double zero_fraction() const;

    // Same zero pattern, values shifted by -mean. Zero detection always
    // refers to the original returns, so the indicator is preserved.
    ReturnSeries demeaned() const;

private:
    ReturnSeries(std::vector<double> values, std::vector<std::uint8_t> indicator,
                 double zero_tolerance);

    std::vector<double> values_;
    std::vector<std::uint8_t> indicator_;
    double zero_tolerance_ = 0.0;
};

} // namespace zeroacf
