#include "series.hpp"

#include <cmath>
#include <utility>

#include "errors.hpp"

namespace zeroacf {

PriceTable::PriceTable(std::vector<PriceRow> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const PriceRow& row = rows_[i];
        if (!std::isfinite(row.close) || row.close <= 0.0) {
            throw_validation("non-positive or non-finite price at row " + std::to_string(i + 1) +
                             " (date " + row.date + ")");
        }
        if (i > 0 && rows_[i - 1].date >= row.date) {
            throw_validation("dates not strictly increasing at row " + std::to_string(i + 1) +
                             " (" + rows_[i - 1].date + " >= " + row.date + ")");
        }
    }
}

namespace {

std::vector<std::uint8_t> derive_indicator(const std::vector<double>& values,
                                           double zero_tolerance) {
    std::vector<std::uint8_t> indicator(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        indicator[i] = std::fabs(values[i]) <= zero_tolerance ? 0 : 1;
    }
    return indicator;
}

} // namespace

ReturnSeries::ReturnSeries(std::vector<double> values, std::vector<std::uint8_t> indicator,
                           double zero_tolerance)
    : values_(std::move(values)), indicator_(std::move(indicator)),
      zero_tolerance_(zero_tolerance) {}

ReturnSeries ReturnSeries::from_returns(std::vector<double> values, double zero_tolerance) {
    if (values.empty()) {
        throw_validation("return series must contain at least one observation");
    }
    if (!(zero_tolerance >= 0.0)) {
        throw_validation("zero tolerance must be non-negative");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw_validation("non-finite return at observation " + std::to_string(i + 1));
        }
    }
    std::vector<std::uint8_t> indicator = derive_indicator(values, zero_tolerance);
    return ReturnSeries(std::move(values), std::move(indicator), zero_tolerance);
}

ReturnSeries ReturnSeries::from_prices(const PriceTable& table, double zero_tolerance) {
    if (table.size() < 2) {
        throw_validation("price table needs at least two rows to form one return");
    }
    std::vector<double> returns(table.size() - 1);
    for (std::size_t i = 1; i < table.size(); ++i) {
        returns[i - 1] = std::log(table.rows()[i].close) - std::log(table.rows()[i - 1].close);
    }
    return from_returns(std::move(returns), zero_tolerance);
}

double ReturnSeries::zero_fraction() const {
    std::size_t nonzero = 0;
    for (std::uint8_t a : indicator_) nonzero += a;
    return 1.0 - static_cast<double>(nonzero) / static_cast<double>(indicator_.size());
}

ReturnSeries ReturnSeries::demeaned() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    const double mean = sum / static_cast<double>(values_.size());
    std::vector<double> shifted(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) shifted[i] = values_[i] - mean;
    return ReturnSeries(std::move(shifted), indicator_, zero_tolerance_);
}

} // namespace zeroacf
