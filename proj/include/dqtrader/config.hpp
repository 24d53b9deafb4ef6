#pragma once

#include <filesystem>

#include <json.hpp>

namespace dqtrader {

/// Every tunable of the ingest, feature, network and agent layers.
/// Defaults give the standard experiment protocol: 1% filter, mon = 100, gamma = 0.05.
struct Config {
    // data ingest
    int price_column = 2;  // 1-based; kline open price
    int volume_column = 6;
    double volume_scale = 1e-7;
    double filter_threshold = 0.01;

    // features
    double denom_floor = 1e-9;
    double feature_norm = 6.0;

    // network
    int hidden_size = 50;

    // agent
    double gamma = 0.05;
    double mlimn = 75.0;
    double prob_eps = 1e-4;
    double alpha_min = 1e-3;
    double alpha_max = 1.0;
    int t_alpha = 1000;
    double fee_rate = 0.001;
    double initial_mon = 100.0;

    /// Throws ConfigError when a value is outside its domain.
    void validate() const;

    bool operator==(const Config&) const = default;
};

nlohmann::ordered_json to_json(const Config& config);

/// Overrides the keys present in `j`; unknown keys are rejected.
void apply_overrides(Config& config, const nlohmann::json& j);

/// Reads a JSON object from `path` and applies it on top of `base`.
Config load_config(const std::filesystem::path& path, Config base = {});

}  // namespace dqtrader
