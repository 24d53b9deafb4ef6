#include "dqtrader/synthetic.hpp"

#include <algorithm>
#include <cstdio>

#include "dqtrader/errors.hpp"
#include "dqtrader/rng.hpp"

namespace dqtrader {

std::vector<RawKlineRow> random_walk_klines(const RandomWalkSpec& spec) {
    if (!(spec.start_price > 0) || spec.min_step < 0 || spec.max_step < spec.min_step || spec.max_step >= 1)
        throw Error("invalid random walk parameters");
    Rng rng(spec.seed);
    std::vector<RawKlineRow> rows;
    rows.reserve(spec.rows);
    double price = spec.start_price;
    for (std::size_t k = 0; k < spec.rows; ++k) {
        RawKlineRow row;
        row.open_time = spec.start_time + static_cast<std::int64_t>(k) * 60000;
        row.open_price = price;
        row.volume = rng.uniform(spec.min_volume, spec.max_volume);
        rows.push_back(row);
        const double sign = rng.bernoulli(0.5) ? 1.0 : -1.0;
        price *= 1.0 + spec.drift + sign * rng.uniform(spec.min_step, spec.max_step);
    }
    return rows;
}

std::string to_kline_csv(const std::vector<RawKlineRow>& rows, double volume_scale) {
    std::string out;
    char buf[256];
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const double open = rows[k].open_price;
        const double close = k + 1 < rows.size() ? rows[k + 1].open_price : open;
        std::snprintf(buf, sizeof buf, "%lld,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      static_cast<long long>(rows[k].open_time), open, std::max(open, close), std::min(open, close),
                      close, rows[k].volume / volume_scale);
        out += buf;
    }
    return out;
}

}  // namespace dqtrader
