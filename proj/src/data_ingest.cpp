#include "dqtrader/data_ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string_view>

#include "dqtrader/errors.hpp"

namespace dqtrader {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '"' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_time(std::string_view s, std::int64_t& out) {
    if (parse_number(s, out)) return true;
    // some exports write integral timestamps in exponent or decimal form
    double d = 0;
    if (!parse_number(s, d) || !std::isfinite(d) || d != std::floor(d)) return false;
    out = static_cast<std::int64_t>(d);
    return true;
}

std::vector<RawKlineRow> parse_stream(std::istream& in, const KlineColumns& cols) {
    if (cols.price_column < 1 || cols.volume_column < 1) throw Error("column indices are 1-based");
    if (!(cols.volume_scale > 0)) throw Error("volume_scale must be positive");
    const auto price_col = static_cast<std::size_t>(cols.price_column - 1);
    const auto volume_col = static_cast<std::size_t>(cols.volume_column - 1);
    const auto needed = std::max(price_col, volume_col) + 1;

    std::vector<RawKlineRow> rows;
    std::string line;
    std::size_t line_no = 0;
    bool seen_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);

        RawKlineRow row;
        double price = 0;
        double volume = 0;
        const bool numeric = fields.size() >= needed && parse_time(fields[0], row.open_time) &&
                             parse_number(fields[price_col], price) && parse_number(fields[volume_col], volume);
        if (!numeric) {
            // header: only the first non-blank line, recognised by a non-numeric time field
            std::int64_t probe = 0;
            if (!seen_data && !parse_time(fields[0], probe)) {
                std::clog << "warning: skipping non-numeric header at line " << line_no << '\n';
                seen_data = true;
                continue;
            }
            if (fields.size() < needed)
                throw ParseError(line_no, "expected at least " + std::to_string(needed) + " columns, got " +
                                              std::to_string(fields.size()));
            throw ParseError(line_no, "non-numeric value in time, price or volume column");
        }
        seen_data = true;
        if (!std::isfinite(price) || price <= 0) throw ParseError(line_no, "price must be positive");
        if (!std::isfinite(volume) || volume < 0) throw ParseError(line_no, "volume must be non-negative");
        if (!rows.empty() && row.open_time <= rows.back().open_time)
            throw ParseError(line_no, "open_time not strictly increasing");
        row.open_price = price;
        row.volume = volume * cols.volume_scale;
        rows.push_back(row);
    }
    if (rows.empty()) throw EmptyInputError("no kline rows in input");
    return rows;
}

}  // namespace

std::vector<RawKlineRow> parse_klines(const std::filesystem::path& path, const KlineColumns& columns) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_stream(in, columns);
}

std::vector<RawKlineRow> parse_klines_text(const std::string& text, const KlineColumns& columns) {
    std::istringstream in(text);
    return parse_stream(in, columns);
}

FilteredSeries FilteredSeries::from_arrays(std::vector<double> prices, std::vector<double> volumes) {
    if (prices.size() != volumes.size()) throw Error("prices and volumes differ in length");
    for (double p : prices)
        if (!(p > 0) || !std::isfinite(p)) throw Error("prices must be positive and finite");
    for (double v : volumes)
        if (!(v >= 0) || !std::isfinite(v)) throw Error("volumes must be non-negative and finite");
    FilteredSeries s;
    s.raw_index.resize(prices.size());
    for (std::size_t k = 0; k < prices.size(); ++k) s.raw_index[k] = k;
    s.prices = std::move(prices);
    s.volumes = std::move(volumes);
    return s;
}

FilteredSeries filter_series(const std::vector<RawKlineRow>& raw, double threshold) {
    if (raw.size() < 2) throw InsufficientDataError("filter needs at least 2 raw rows");
    if (!(threshold > 0)) throw Error("filter threshold must be positive");

    FilteredSeries out;
    double reference = raw[1].open_price;
    out.prices.push_back(reference);
    out.volumes.push_back(raw[0].volume);
    out.raw_index.push_back(1);
    for (std::size_t i = 2; i < raw.size(); ++i) {
        const double p = raw[i].open_price;
        if (std::abs(p - reference) / reference > threshold) {
            reference = p;
            out.prices.push_back(p);
            out.volumes.push_back(raw[i - 1].volume);
            out.raw_index.push_back(i);
        }
    }
    return out;
}

FilteredSeries slice(const FilteredSeries& series, const DatasetSlice& range) {
    if (range.start_index >= range.end_index || range.end_index > series.size())
        throw BoundsError("slice [" + std::to_string(range.start_index) + ", " + std::to_string(range.end_index) +
                          ") invalid for series of length " + std::to_string(series.size()));
    const auto first = static_cast<std::ptrdiff_t>(range.start_index);
    const auto last = static_cast<std::ptrdiff_t>(range.end_index);
    FilteredSeries out;
    out.prices.assign(series.prices.begin() + first, series.prices.begin() + last);
    out.volumes.assign(series.volumes.begin() + first, series.volumes.begin() + last);
    out.raw_index.assign(series.raw_index.begin() + first, series.raw_index.begin() + last);
    return out;
}

DatasetSlice parse_slice(const std::string& spec, std::size_t series_length) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error("slice must look like start:end");
    DatasetSlice s{0, series_length, {}};
    const std::string_view lhs = trim(std::string_view(spec).substr(0, colon));
    const std::string_view rhs = trim(std::string_view(spec).substr(colon + 1));
    if (!lhs.empty() && !parse_number(lhs, s.start_index)) throw Error("bad slice start '" + std::string(lhs) + "'");
    if (!rhs.empty() && !parse_number(rhs, s.end_index)) throw Error("bad slice end '" + std::string(rhs) + "'");
    return s;
}

}  // namespace dqtrader
