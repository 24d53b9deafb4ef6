#include "dqtrader/stats.hpp"

#include <algorithm>
#include <cmath>

#include "dqtrader/errors.hpp"

namespace dqtrader {

AggregateStats aggregate(std::span<const double> values, double loss_threshold) {
    if (values.empty()) throw Error("cannot aggregate an empty sample");

    AggregateStats s;
    s.n = values.size();
    s.min = values.front();
    s.max = values.front();
    // Welford
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t losses = 0;
    std::size_t k = 0;
    for (double v : values) {
        ++k;
        const double delta = v - mean;
        mean += delta / static_cast<double>(k);
        m2 += delta * (v - mean);
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
        if (v <= loss_threshold) ++losses;
    }
    s.mean = mean;
    s.std_dev = s.n > 1 ? std::sqrt(m2 / static_cast<double>(s.n - 1)) : 0.0;
    s.p_loss = static_cast<double>(losses) / static_cast<double>(s.n);

    std::vector<double> scratch(values.begin(), values.end());
    const auto mid = scratch.begin() + static_cast<std::ptrdiff_t>(s.n / 2);
    std::nth_element(scratch.begin(), mid, scratch.end());
    if (s.n % 2 == 1) {
        s.median = *mid;
    } else {
        const double lower = *std::max_element(scratch.begin(), mid);
        s.median = (lower + *mid) / 2.0;
    }
    return s;
}

double sorted_quantile(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw Error("quantile of empty sample");
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Histogram freedman_diaconis(std::span<const double> values, std::size_t min_bins, std::size_t max_bins) {
    if (values.empty()) throw Error("histogram of empty sample");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted.front();
    const double hi = sorted.back();
    const double range = hi - lo;

    std::size_t bins = min_bins;
    if (range > 0) {
        const double iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
        const double width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
        if (width > 0) {
            const double wanted = std::ceil(range / width);
            bins = wanted >= static_cast<double>(max_bins) ? max_bins : static_cast<std::size_t>(wanted);
        }
        bins = std::clamp(bins, min_bins, max_bins);
    }

    Histogram h;
    h.counts.assign(bins, 0);
    h.edges.resize(bins + 1);
    // a constant sample gets unit-wide bins centred on the value
    const double start = range > 0 ? lo : lo - 0.5;
    const double width = range > 0 ? range / static_cast<double>(bins) : 1.0 / static_cast<double>(bins);
    for (std::size_t b = 0; b <= bins; ++b) h.edges[b] = start + width * static_cast<double>(b);
    h.edges.back() = range > 0 ? hi : lo + 0.5;
    for (double v : sorted) {
        auto b = static_cast<std::size_t>((v - start) / width);
        if (b >= bins) b = bins - 1;
        // guard against rounding at interior edges
        while (b > 0 && v < h.edges[b]) --b;
        while (b + 1 < bins && v >= h.edges[b + 1]) ++b;
        ++h.counts[b];
    }
    return h;
}

nlohmann::ordered_json to_json(const AggregateStats& s) {
    return {{"n", s.n},           {"mean", s.mean}, {"median", s.median}, {"std_dev", s.std_dev},
            {"p_loss", s.p_loss}, {"min", s.min},   {"max", s.max}};
}

nlohmann::ordered_json to_json(const Histogram& h) { return {{"edges", h.edges}, {"counts", h.counts}}; }

}  // namespace dqtrader
