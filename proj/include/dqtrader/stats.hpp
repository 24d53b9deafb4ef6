#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

namespace dqtrader {

struct AggregateStats {
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;  // sample (n - 1); 0 for a single value
    double p_loss = 0.0;   // fraction of values <= the loss threshold
    double min = 0.0;
    double max = 0.0;
    std::size_t n = 0;
};

/// Throws Error on an empty input.
AggregateStats aggregate(std::span<const double> values, double loss_threshold = 100.0);

struct Histogram {
    std::vector<double> edges;  // counts.size() + 1 ascending edges
    std::vector<std::size_t> counts;
};

/// Freedman-Diaconis bin width 2*IQR*n^(-1/3) over [min, max], with the bin
/// count clamped to [min_bins, max_bins]. The last bin is closed on the right.
Histogram freedman_diaconis(std::span<const double> values, std::size_t min_bins = 10, std::size_t max_bins = 1000);

/// Linearly interpolated quantile of already sorted data, q in [0, 1].
double sorted_quantile(std::span<const double> sorted, double q);

nlohmann::ordered_json to_json(const AggregateStats& stats);
nlohmann::ordered_json to_json(const Histogram& histogram);

}  // namespace dqtrader
