#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace dqtrader {

struct RawKlineRow {
    std::int64_t open_time = 0;  // ms
    double open_price = 0.0;
    double volume = 0.0;  // already multiplied by the volume scale
};

struct KlineColumns {
    int price_column = 2;  // 1-based
    int volume_column = 6;
    double volume_scale = 1e-7;
};

/// Reads a headerless kline CSV (a leading non-numeric header line is skipped
/// with a warning on std::clog). Column 1 must hold the open time.
/// Throws EmptyInputError for a file without data rows, ParseError naming the
/// offending line otherwise, IoError if the file cannot be opened.
std::vector<RawKlineRow> parse_klines(const std::filesystem::path& path, const KlineColumns& columns = {});

/// Same as parse_klines but over in-memory CSV text.
std::vector<RawKlineRow> parse_klines_text(const std::string& text, const KlineColumns& columns = {});

/// Price/volume stream that survived the relative-change filter.
/// volumes[k] is the volume of the raw interval preceding prices[k].
struct FilteredSeries {
    std::vector<double> prices;
    std::vector<double> volumes;
    std::vector<std::size_t> raw_index;  // position of prices[k] in the raw row array

    std::size_t size() const noexcept { return prices.size(); }
    bool empty() const noexcept { return prices.empty(); }

    /// Wraps already-filtered arrays. Throws Error on mismatched lengths,
    /// non-positive prices or negative volumes.
    static FilteredSeries from_arrays(std::vector<double> prices, std::vector<double> volumes);
};

/// Keeps a raw price when its absolute relative change against the last kept
/// price exceeds `threshold`. The first kept point pairs raw price 2 with raw
/// volume 1; later points pair raw price i with raw volume i-1.
/// Throws InsufficientDataError for fewer than 2 rows.
FilteredSeries filter_series(const std::vector<RawKlineRow>& raw, double threshold = 0.01);

struct DatasetSlice {
    std::size_t start_index = 0;
    std::size_t end_index = 0;  // exclusive
    std::string label;
};

/// Contiguous [start, end) sub-series; throws BoundsError when out of range.
FilteredSeries slice(const FilteredSeries& series, const DatasetSlice& range);

/// Parses "start:end"; either side may be empty (0 and series end).
DatasetSlice parse_slice(const std::string& spec, std::size_t series_length);

}  // namespace dqtrader
