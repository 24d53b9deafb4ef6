#include "dqtrader/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dqtrader/errors.hpp"

namespace dqtrader {

MarketBlock block_at(const FilteredSeries& series, std::size_t block) {
    const std::size_t first = block * kBlockSize;
    if (first + kBlockSize > series.size())
        throw BoundsError("block " + std::to_string(block) + " exceeds series of length " +
                          std::to_string(series.size()));
    MarketBlock b;
    for (std::size_t j = 0; j < kBlockSize; ++j) {
        b.prices[j] = series.prices[first + j];
        b.volumes[j] = series.volumes[first + j];
    }
    return b;
}

void require_positive_block_volumes(const FilteredSeries& series) {
    for (std::size_t b = 0; b < block_count(series); ++b) {
        const auto first = series.volumes.begin() + static_cast<std::ptrdiff_t>(b * kBlockSize);
        if (std::accumulate(first, first + kBlockSize, 0.0) <= 0.0)
            throw DegenerateVolumeError("block " + std::to_string(b) + " (filtered positions " +
                                        std::to_string(b * kBlockSize) + ".." +
                                        std::to_string(b * kBlockSize + kBlockSize - 1) + ") has zero volume");
    }
}

namespace {

template <std::size_t N>
std::array<double, N - 1> relative_steps(const std::array<double, N>& x, double floor) {
    std::array<double, N - 1> out{};
    for (std::size_t k = 0; k + 1 < N; ++k) out[k] = (x[k + 1] - x[k]) / std::max(std::abs(x[k]), floor);
    return out;
}

}  // namespace

NmdCascade nmd_cascade(const PriceBlock& pr, double denom_floor) {
    NmdCascade c;
    for (std::size_t i = 0; i + 1 < kBlockSize; ++i) c.level1[i] = (pr[i + 1] - pr[i]) / pr[i];
    c.level2 = relative_steps(c.level1, denom_floor);
    c.level3 = relative_steps(c.level2, denom_floor);
    c.level4 = relative_steps(c.level3, denom_floor)[0];
    return c;
}

double RsiState::update(const PriceBlock& prices) {
    std::copy(window_.begin() + kBlockSize, window_.end(), window_.begin());
    std::copy(prices.begin(), prices.end(), window_.end() - kBlockSize);
    for (std::size_t j = 0; j + 1 < kRsiWindow; ++j) {
        const double diff = window_[j + 1] - window_[j];
        up_[j] = diff > 0 ? diff : 0.0;
        down_[j] = diff < 0 ? -diff : 0.0;
    }
    const double n = static_cast<double>(up_.size());
    const double mean_up = std::accumulate(up_.begin(), up_.end(), 0.0) / n;
    const double mean_down = std::accumulate(down_.begin(), down_.end(), 0.0) / n;
    if (mean_down == 0.0) return 100.0;
    return 100.0 - 100.0 / (1.0 + mean_up / mean_down);
}

VolumeAverages VolumeState::update(const PriceBlock& volumes) {
    VolumeAverages out;
    out.cav = std::accumulate(volumes.begin(), volumes.end(), 0.0) / static_cast<double>(kBlockSize);
    std::copy(ring_.begin() + 1, ring_.end(), ring_.begin());
    ring_.back() = out.cav;
    out.av = std::accumulate(ring_.begin(), ring_.end(), 0.0) / static_cast<double>(kVolumeRing);
    return out;
}

FeatureVector assemble_features(const MarketBlock& block, const FeatureInputs& in, double target_norm) {
    if (in.av == 0.0 || in.cav == 0.0) throw DegenerateVolumeError("zero volume average; ratio features undefined");

    const auto& pr = block.prices;
    const double vol5 = block.volumes[kBlockSize - 1];
    FeatureVector f{};
    std::size_t k = 0;
    f[k++] = 0.0;
    for (double p : pr) f[k++] = p;
    f[k++] = in.ipr;
    f[k++] = (pr[kBlockSize - 1] - in.ipr) / in.ipr;
    f[k++] = in.mon;
    f[k++] = in.cns;
    f[k++] = in.cav;
    f[k++] = in.av;
    f[k++] = (in.cav - in.av) / in.av;
    f[k++] = (vol5 - in.av) / in.av;
    f[k++] = (vol5 - in.cav) / in.cav;
    f[k++] = in.rsi;
    for (double v : in.nmd.level1) f[k++] = v;
    for (double v : in.nmd.level2) f[k++] = v;
    for (double v : in.nmd.level3) f[k++] = v;
    f[k++] = in.nmd.level4;
    f[k++] = in.mlim;

    const double norm = std::sqrt(std::inner_product(f.begin(), f.end(), f.begin(), 0.0));
    if (!std::isfinite(norm) || norm == 0.0) throw NumericError("feature vector has zero or non-finite norm");
    for (double& v : f) v = target_norm * (v / norm);
    f[0] = 1.0;
    return f;
}

}  // namespace dqtrader
