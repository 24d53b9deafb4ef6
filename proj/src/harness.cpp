#include "dqtrader/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "dqtrader/errors.hpp"
#include "dqtrader/features.hpp"
#include "dqtrader/rng.hpp"
#include "dqtrader/wallet.hpp"

namespace dqtrader {

std::string_view to_string(RunMode mode) noexcept { return mode == RunMode::agent ? "agent" : "random"; }

RunMode parse_run_mode(std::string_view text) {
    if (text == "agent") return RunMode::agent;
    if (text == "random") return RunMode::random;
    throw ConfigError("mode must be 'agent' or 'random', got '" + std::string(text) + "'");
}

void ExperimentConfig::validate() const {
    if (runs < 1) throw ConfigError("runs must be >= 1");
    params.validate();
}

FilteredSeries load_series(const ExperimentConfig& config) {
    const KlineColumns columns{config.params.price_column, config.params.volume_column, config.params.volume_scale};
    const auto raw = parse_klines(config.data_path, columns);
    auto series = filter_series(raw, config.params.filter_threshold);
    if (config.slice) {
        auto range = parse_slice(*config.slice, series.size());
        range.label = config.label;
        series = slice(series, range);
    }
    return series;
}

void validate_series(const FilteredSeries& series, RunMode mode) {
    const std::size_t needed = mode == RunMode::agent ? kMinAgentSeries : 2 * kBlockSize;
    if (series.size() < needed)
        throw ConfigError("series has " + std::to_string(series.size()) + " filtered points; " +
                          std::string(to_string(mode)) + " mode needs at least " + std::to_string(needed));
    if (mode == RunMode::agent) require_positive_block_volumes(series);
}

namespace {

RunResult run_random(const ExperimentConfig& config, const FilteredSeries& series, std::size_t run_index) {
    Rng rng(derive_stream_seed(config.master_seed, run_index));
    Wallet wallet = Wallet::initial(config.params.initial_mon, config.params.mlimn);
    const auto last_price_of = [&](std::size_t block) { return series.prices[block * kBlockSize + kBlockSize - 1]; };

    RunResult r;
    r.run_index = run_index;
    r.episodes = 1;
    std::size_t block = 0;
    while ((block + 2) * kBlockSize <= series.size()) {
        const Action action(static_cast<int>(rng.uniform_int(1, kActionCount)));
        execute_action(wallet, action, last_price_of(block), config.params.fee_rate);
        ++block;
        ++r.steps_taken;
    }
    r.final_sav = 0.0;
    r.final_twth = wallet.wealth(last_price_of(block));
    return r;
}

RunResult run_agent(const ExperimentConfig& config, const FilteredSeries& series, std::size_t run_index,
                    const TraceSink& trace) {
    TradingAgent agent(series, config.params, derive_stream_seed(config.master_seed, run_index));
    while (agent.can_step()) {
        const StepRecord rec = agent.learning_step();
        if (trace) trace(rec);
    }
    RunResult r;
    r.run_index = run_index;
    r.final_sav = agent.wallet().sav;
    r.final_twth = agent.total_wealth();
    r.steps_taken = agent.steps();
    r.episodes = agent.episodes();
    return r;
}

}  // namespace

RunResult run_once(const ExperimentConfig& config, const FilteredSeries& series, std::size_t run_index,
                   const TraceSink& trace) {
    validate_series(series, config.mode);
    return config.mode == RunMode::agent ? run_agent(config, series, run_index, trace)
                                         : run_random(config, series, run_index);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const FilteredSeries& series, const TraceSink& trace) {
    config.validate();
    validate_series(series, config.mode);

    ExperimentResult out;
    out.config = config;
    out.series_length = series.size();
    out.runs.resize(config.runs);

    std::size_t workers = config.workers == 0 ? std::thread::hardware_concurrency() : config.workers;
    workers = std::clamp<std::size_t>(workers, 1, config.runs);

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(config.runs);
    const auto work = [&] {
        for (std::size_t i = next++; i < config.runs; i = next++) {
            try {
                const TraceSink none;
                out.runs[i] = config.mode == RunMode::agent ? run_agent(config, series, i, i == 0 ? trace : none)
                                                            : run_random(config, series, i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<double> twth;
    std::vector<double> sav;
    twth.reserve(out.runs.size());
    sav.reserve(out.runs.size());
    for (const auto& r : out.runs) {
        twth.push_back(r.final_twth);
        sav.push_back(r.final_sav);
    }
    const double loss_threshold = config.params.initial_mon;
    out.twth = aggregate(twth, loss_threshold);
    out.twth_histogram = freedman_diaconis(twth);
    if (config.mode == RunMode::agent) {
        out.sav = aggregate(sav, loss_threshold);
        out.sav_histogram = freedman_diaconis(sav);
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const FilteredSeries series = load_series(config);
    return run_experiment(config, series);
}

}  // namespace dqtrader
