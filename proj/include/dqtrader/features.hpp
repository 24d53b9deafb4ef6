#pragma once

#include <array>
#include <cstddef>

#include "dqtrader/data_ingest.hpp"

namespace dqtrader {

inline constexpr std::size_t kBlockSize = 5;
inline constexpr std::size_t kRsiWindow = 15;
inline constexpr std::size_t kVolumeRing = 20;
inline constexpr std::size_t kFeatureSize = 27;

using PriceBlock = std::array<double, kBlockSize>;

/// Five consecutive filtered prices and the volumes of the intervals preceding them.
struct MarketBlock {
    PriceBlock prices{};
    PriceBlock volumes{};
};

/// Block `block` (0-based) covers filtered positions 5*block .. 5*block+4.
/// Throws BoundsError if the series does not contain the whole block.
MarketBlock block_at(const FilteredSeries& series, std::size_t block);

/// Number of complete blocks in a series.
inline std::size_t block_count(const FilteredSeries& series) noexcept { return series.size() / kBlockSize; }

/// Throws DegenerateVolumeError naming the first complete block with zero total volume.
void require_positive_block_volumes(const FilteredSeries& series);

/// Iterated relative differences of a price block.
struct NmdCascade {
    std::array<double, 4> level1{};
    std::array<double, 3> level2{};
    std::array<double, 2> level3{};
    double level4 = 0.0;
};

/// Level 1 divides by the (positive) price; levels 2-4 divide by the magnitude of
/// the previous level, floored at `denom_floor`, so the numerator's sign survives.
NmdCascade nmd_cascade(const PriceBlock& prices, double denom_floor = 1e-9);

/// 15-price RSI window advanced five prices at a time. Starts zero-filled, so
/// the first two blocks see synthetic leading zeros.
class RsiState {
public:
    /// Shifts the window left by five, appends `prices`, returns the RSI in [0, 100].
    double update(const PriceBlock& prices);

    const std::array<double, kRsiWindow>& window() const noexcept { return window_; }
    const std::array<double, kRsiWindow - 1>& up() const noexcept { return up_; }
    const std::array<double, kRsiWindow - 1>& down() const noexcept { return down_; }

private:
    std::array<double, kRsiWindow> window_{};
    std::array<double, kRsiWindow - 1> up_{};
    std::array<double, kRsiWindow - 1> down_{};
};

struct VolumeAverages {
    double cav = 0.0;  // mean volume of the current block
    double av = 0.0;   // mean of the last 20 block means (100 volumes)
};

/// Ring of the 20 most recent block-mean volumes, zero-initialised.
class VolumeState {
public:
    VolumeAverages update(const PriceBlock& volumes);

    const std::array<double, kVolumeRing>& ring() const noexcept { return ring_; }

private:
    std::array<double, kVolumeRing> ring_{};
};

/// Everything that goes into one state vector besides the block itself.
struct FeatureInputs {
    double ipr = 0.0;  // first price of the episode
    double mon = 0.0;
    double cns = 0.0;
    double cav = 0.0;
    double av = 0.0;
    double rsi = 0.0;
    NmdCascade nmd;
    double mlim = 0.0;
};

using FeatureVector = std::array<double, kFeatureSize>;

/// Layout:
///   [0] bias, [1..5] prices, [6] ipr, [7] (pr5-ipr)/ipr, [8] mon, [9] cns,
///   [10] cav, [11] av, [12] (cav-av)/av, [13] (vol5-av)/av, [14] (vol5-cav)/cav,
///   [15] rsi, [16..19] nmd1, [20..22] nmd2, [23..24] nmd3, [25] nmd4, [26] mlim.
/// The vector is scaled to norm `target_norm` with the bias slot zeroed, then
/// the bias slot is set to 1. Throws DegenerateVolumeError if av or cav is 0.
FeatureVector assemble_features(const MarketBlock& block, const FeatureInputs& in, double target_norm = 6.0);

}  // namespace dqtrader
