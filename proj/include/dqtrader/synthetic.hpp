#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dqtrader/data_ingest.hpp"

namespace dqtrader {

/// Multiplicative random walk: p' = p * (1 + drift + s*m) with s = +-1 equally
/// likely and m uniform in [min_step, max_step]. With drift 0 the price is a
/// martingale; with min_step above the filter threshold every row survives it.
struct RandomWalkSpec {
    std::size_t rows = 5001;
    std::uint64_t seed = 1;
    double start_price = 1.0;
    double drift = 0.0;
    double min_step = 0.015;
    double max_step = 0.03;
    double min_volume = 50.0;  // scaled units
    double max_volume = 150.0;
    std::int64_t start_time = 1523923200000;
};

std::vector<RawKlineRow> random_walk_klines(const RandomWalkSpec& spec);

/// Kline CSV text (open time, open, high, low, close, volume) with the volume
/// written back in raw units, i.e. divided by `volume_scale`.
std::string to_kline_csv(const std::vector<RawKlineRow>& rows, double volume_scale = 1e-7);

}  // namespace dqtrader
