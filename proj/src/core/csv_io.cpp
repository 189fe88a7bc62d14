#include "csv_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "format_util.hpp"

namespace zeroacf {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& text, std::size_t line_no, const char* what) {
    const char* begin = text.data();
    const char* end = begin + text.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw_validation(std::string("cannot parse ") + what + " '" + text + "' at line " +
                         std::to_string(line_no));
    }
    return value;
}

} // namespace

ReturnSeries read_series_csv(const std::string& path, double zero_tolerance) {
    std::ifstream in(path);
    if (!in) {
        throw_io("cannot open '" + path + "' for reading");
    }

    std::string line;
    std::vector<std::string> header;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
            static_cast<unsigned char>(line[1]) == 0xBB &&
            static_cast<unsigned char>(line[2]) == 0xBF) {
            line.erase(0, 3); // UTF-8 BOM
        }
        if (trim(line).empty()) continue;
        header = split_csv_line(line);
        break;
    }
    if (header.empty()) {
        throw_validation("'" + path + "' is empty or has no header row");
    }

    int date_col = -1;
    int close_col = -1;
    int return_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = lower(header[i]);
        if (name == "date") date_col = static_cast<int>(i);
        if (name == "close") close_col = static_cast<int>(i);
        if (name == "return") return_col = static_cast<int>(i);
    }

    if (return_col >= 0) {
        std::vector<double> returns;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (trim(line).empty()) continue;
            const auto fields = split_csv_line(line);
            if (static_cast<std::size_t>(return_col) >= fields.size()) {
                throw_validation("missing 'return' field at line " + std::to_string(line_no));
            }
            returns.push_back(parse_double(fields[return_col], line_no, "return"));
        }
        if (returns.empty()) {
            throw_validation("'" + path + "' contains a header but no return rows");
        }
        return ReturnSeries::from_returns(std::move(returns), zero_tolerance);
    }

    if (date_col < 0 || close_col < 0) {
        throw_validation("'" + path +
                         "': header must contain either 'return' or both 'date' and 'close'");
    }

    std::vector<PriceRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split_csv_line(line);
        const std::size_t need =
            static_cast<std::size_t>(std::max(date_col, close_col));
        if (need >= fields.size()) {
            throw_validation("missing field at line " + std::to_string(line_no));
        }
        PriceRow row;
        row.date = fields[date_col];
        if (row.date.empty()) {
            throw_validation("empty date at line " + std::to_string(line_no));
        }
        row.close = parse_double(fields[close_col], line_no, "close");
        rows.push_back(std::move(row));
    }
    return ReturnSeries::from_prices(PriceTable(std::move(rows)), zero_tolerance);
}

void write_returns_csv(const std::string& path, std::span<const double> returns) {
    std::ofstream out(path);
    if (!out) {
        throw_io("cannot open '" + path + "' for writing");
    }
    out << "return\n";
    for (double r : returns) out << format_double(r) << '\n';
    if (!out) {
        throw_io("write to '" + path + "' failed");
    }
}

} // namespace zeroacf
