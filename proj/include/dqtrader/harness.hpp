#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dqtrader/agent.hpp"
#include "dqtrader/config.hpp"
#include "dqtrader/data_ingest.hpp"
#include "dqtrader/stats.hpp"

namespace dqtrader {

enum class RunMode { agent, random };

std::string_view to_string(RunMode mode) noexcept;
RunMode parse_run_mode(std::string_view text);

struct ExperimentConfig {
    std::filesystem::path data_path;
    std::optional<std::string> slice;  // "start:end" over the filtered series
    std::string label;
    RunMode mode = RunMode::agent;
    std::size_t runs = 1000;
    std::uint64_t master_seed = 0;
    std::size_t workers = 1;  // 0: one per hardware thread
    Config params;

    /// Throws ConfigError.
    void validate() const;
};

struct RunResult {
    std::size_t run_index = 0;
    double final_sav = 0.0;
    double final_twth = 0.0;  // sav + res + mon + cns * last price
    std::size_t steps_taken = 0;
    std::size_t episodes = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::size_t series_length = 0;
    std::vector<RunResult> runs;  // ordered by run_index
    AggregateStats twth;
    Histogram twth_histogram;
    std::optional<AggregateStats> sav;  // absent for the random baseline
    std::optional<Histogram> sav_histogram;
};

using TraceSink = std::function<void(const StepRecord&)>;

/// Parse, filter and slice the configured dataset.
FilteredSeries load_series(const ExperimentConfig& config);

/// Rejects series the given mode cannot run on: ConfigError when too short,
/// DegenerateVolumeError for a zero-volume block in agent mode.
void validate_series(const FilteredSeries& series, RunMode mode);

/// One seeded run. Random mode trades a uniformly drawn action every block with
/// the same fee and failure rules but no learning and no terminal states.
RunResult run_once(const ExperimentConfig& config, const FilteredSeries& series, std::size_t run_index,
                   const TraceSink& trace = {});

/// All runs, executed on `config.workers` threads. Results do not depend on the
/// worker count. `trace`, if set, receives every step of run 0.
ExperimentResult run_experiment(const ExperimentConfig& config, const FilteredSeries& series,
                                 const TraceSink& trace = {});

ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace dqtrader
