#pragma once

#include <cstddef>
#include <cstdint>

#include <json.hpp>

#include "dqtrader/config.hpp"
#include "dqtrader/data_ingest.hpp"
#include "dqtrader/double_q.hpp"
#include "dqtrader/features.hpp"
#include "dqtrader/rng.hpp"
#include "dqtrader/schedules.hpp"
#include "dqtrader/wallet.hpp"

namespace dqtrader {

/// Shortest series the agent accepts: a full RSI window.
inline constexpr std::size_t kMinAgentSeries = kRsiWindow;

struct StepRecord {
    std::size_t step = 0;
    std::size_t episode = 0;
    std::size_t block = 0;  // 0-based block the decision was taken at
    Action action = Action::hold();
    bool executed = true;
    double fee_paid = 0.0;
    double price = 0.0;       // trade price (last price of `block`)
    double next_price = 0.0;  // last price of the following block
    double eps = 0.0;
    double alpha = 0.0;
    double wth_before = 0.0;
    double wth_after = 0.0;
    double reward = 0.0;     // before any savings bonus
    double sav_bonus = 0.0;  // added to the target of a save terminal
    double q_sa = 0.0;       // averaged Q of the taken action
    double rsi_after = 0.0;
    TerminalKind terminal = TerminalKind::none;
    DoubleQUpdate update;
    Wallet wallet_after;
};

nlohmann::ordered_json to_json(const StepRecord& record);

/// Online episodic double-Q trader over one filtered series. One decision per
/// 5-price block; episodes end on the save / reinvest / markdown terminals.
///
/// The series must outlive the agent.
class TradingAgent {
public:
    /// Throws InsufficientDataError for series shorter than kMinAgentSeries.
    TradingAgent(const FilteredSeries& series, const Config& config, std::uint64_t seed);

    /// False once fewer than two complete blocks remain from the current one.
    bool can_step() const noexcept;

    /// Act at the current block, observe the next, learn. Requires can_step().
    StepRecord learning_step();

    const Wallet& wallet() const noexcept { return wallet_; }
    const DoubleQ& networks() const noexcept { return q_; }
    const FeatureVector& features() const noexcept { return features_; }

    /// Last price the agent has observed; final wealth is valued at it.
    double last_price() const noexcept { return last_price_; }
    double total_wealth() const noexcept { return wallet_.sav + wallet_.res + wallet_.wealth(last_price_); }

    std::size_t block() const noexcept { return block_; }
    std::size_t steps() const noexcept { return steps_; }
    std::size_t episodes() const noexcept { return episodes_; }

private:
    void begin_episode();
    FeatureVector build_features(const MarketBlock& block, const VolumeAverages& vol, double rsi,
                                 const NmdCascade& nmd) const;

    const FilteredSeries* series_;
    Config config_;
    Rng rng_;
    DoubleQ q_;
    EpsilonSchedule eps_;
    AlphaSchedule alpha_;
    RsiState rsi_;
    VolumeState volume_;
    Wallet wallet_;

    std::size_t block_ = 0;
    bool finished_ = false;
    double ipr_ = 0.0;
    double wth_ = 0.0;
    double last_price_ = 0.0;
    FeatureVector features_{};
    StateEvaluation state_;
    std::size_t steps_ = 0;
    std::size_t episodes_ = 0;
};

}  // namespace dqtrader
