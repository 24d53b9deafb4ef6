#include "dqtrader/config.hpp"

#include <fstream>
#include <string>

#include "dqtrader/errors.hpp"

namespace dqtrader {

namespace {

template <typename T>
void read_key(const nlohmann::json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if constexpr (std::is_same_v<T, int>) {
        if (!v.is_number_integer()) throw ConfigError(std::string("config key '") + key + "' must be an integer");
        out = v.get<int>();
    } else {
        if (!v.is_number()) throw ConfigError(std::string("config key '") + key + "' must be a number");
        out = v.get<double>();
    }
}

void require(bool ok, const char* message) {
    if (!ok) throw ConfigError(message);
}

}  // namespace

void Config::validate() const {
    require(price_column >= 1, "price_column must be >= 1");
    require(volume_column >= 1, "volume_column must be >= 1");
    require(volume_scale > 0, "volume_scale must be > 0");
    require(filter_threshold > 0, "filter_threshold must be > 0");
    require(denom_floor > 0, "denom_floor must be > 0");
    require(feature_norm > 0, "feature_norm must be > 0");
    require(hidden_size >= 0, "hidden_size must be >= 0");
    require(gamma >= 0 && gamma <= 1, "gamma must lie in [0, 1]");
    require(prob_eps >= 0 && prob_eps <= 1, "prob_eps must lie in [0, 1]");
    require(alpha_min > 0 && alpha_min < alpha_max, "need 0 < alpha_min < alpha_max");
    require(t_alpha >= 1, "t_alpha must be >= 1");
    require(fee_rate >= 0 && fee_rate < 1, "fee_rate must lie in [0, 1)");
    require(initial_mon > 0, "initial_mon must be > 0");
}

nlohmann::ordered_json to_json(const Config& c) {
    return {
        {"price_column", c.price_column},
        {"volume_column", c.volume_column},
        {"volume_scale", c.volume_scale},
        {"filter_threshold", c.filter_threshold},
        {"denom_floor", c.denom_floor},
        {"feature_norm", c.feature_norm},
        {"hidden_size", c.hidden_size},
        {"gamma", c.gamma},
        {"mlimn", c.mlimn},
        {"prob_eps", c.prob_eps},
        {"alpha_min", c.alpha_min},
        {"alpha_max", c.alpha_max},
        {"t_alpha", c.t_alpha},
        {"fee_rate", c.fee_rate},
        {"initial_mon", c.initial_mon},
    };
}

void apply_overrides(Config& c, const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    const auto known = to_json(c);
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");
    }
    read_key(j, "price_column", c.price_column);
    read_key(j, "volume_column", c.volume_column);
    read_key(j, "volume_scale", c.volume_scale);
    read_key(j, "filter_threshold", c.filter_threshold);
    read_key(j, "denom_floor", c.denom_floor);
    read_key(j, "feature_norm", c.feature_norm);
    read_key(j, "hidden_size", c.hidden_size);
    read_key(j, "gamma", c.gamma);
    read_key(j, "mlimn", c.mlimn);
    read_key(j, "prob_eps", c.prob_eps);
    read_key(j, "alpha_min", c.alpha_min);
    read_key(j, "alpha_max", c.alpha_max);
    read_key(j, "t_alpha", c.t_alpha);
    read_key(j, "fee_rate", c.fee_rate);
    read_key(j, "initial_mon", c.initial_mon);
}

Config load_config(const std::filesystem::path& path, Config base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config file " + path.string() + ": " + e.what());
    }
    apply_overrides(base, j);
    base.validate();
    return base;
}

}  // namespace dqtrader
