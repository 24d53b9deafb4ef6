#include "dqtrader/agent.hpp"

#include <string>

#include "dqtrader/errors.hpp"

namespace dqtrader {

namespace {

FlnNetwork make_network(const Config& config, Rng& rng) {
    return FlnNetwork(FlnShape{kFeatureSize, static_cast<std::size_t>(config.hidden_size),
                               static_cast<std::size_t>(kActionCount)},
                      rng);
}

}  // namespace

TradingAgent::TradingAgent(const FilteredSeries& series, const Config& config, std::uint64_t seed)
    : series_(&series),
      config_(config),
      rng_(seed),
      q_([&] {
          if (series.size() < kMinAgentSeries)
              throw InsufficientDataError("agent needs at least " + std::to_string(kMinAgentSeries) +
                                          " filtered points, got " + std::to_string(series.size()));
          auto first = make_network(config, rng_);
          auto second = make_network(config, rng_);
          return DoubleQ(std::move(first), std::move(second));
      }()),
      eps_(config.prob_eps),
      alpha_(config.alpha_min, config.alpha_max, config.t_alpha),
      wallet_(Wallet::initial(config.initial_mon, config.mlimn)) {
    episodes_ = 1;
    begin_episode();
}

bool TradingAgent::can_step() const noexcept {
    return !finished_ && (block_ + 2) * kBlockSize <= series_->size();
}

FeatureVector TradingAgent::build_features(const MarketBlock& block, const VolumeAverages& vol, double rsi,
                                           const NmdCascade& nmd) const {
    FeatureInputs in;
    in.ipr = ipr_;
    in.mon = wallet_.mon;
    in.cns = wallet_.cns;
    in.cav = vol.cav;
    in.av = vol.av;
    in.rsi = rsi;
    in.nmd = nmd;
    in.mlim = wallet_.mlim;
    return assemble_features(block, in, config_.feature_norm);
}

void TradingAgent::begin_episode() {
    const MarketBlock block = block_at(*series_, block_);
    ipr_ = block.prices[0];
    const VolumeAverages vol = volume_.update(block.volumes);
    const NmdCascade nmd = nmd_cascade(block.prices, config_.denom_floor);
    const double rsi = rsi_.update(block.prices);
    features_ = build_features(block, vol, rsi, nmd);
    state_ = q_.evaluate(features_);
    last_price_ = block.prices[kBlockSize - 1];
    wth_ = wallet_.wealth(last_price_);
}

StepRecord TradingAgent::learning_step() {
    if (!can_step()) throw Error("learning_step called with no further block available");

    StepRecord rec;
    rec.step = steps_++;
    rec.episode = episodes_;
    rec.block = block_;

    q_.requery(state_);
    rec.eps = eps_.step(rng_);
    const Action action = select_action(state_.q_avg, rec.eps, rng_);
    rec.alpha = alpha_.step();
    rec.q_sa = state_.q_avg[action.row()];

    rec.price = series_->prices[block_ * kBlockSize + kBlockSize - 1];
    const ActionOutcome outcome = execute_action(wallet_, action, rec.price, config_.fee_rate);
    rec.action = action;
    rec.executed = outcome.executed;
    rec.fee_paid = outcome.fee_paid;

    const MarketBlock next = block_at(*series_, block_ + 1);
    rec.next_price = next.prices[kBlockSize - 1];
    last_price_ = rec.next_price;
    rec.wth_before = wth_;
    rec.wth_after = wallet_.wealth(rec.next_price);
    rec.reward = compute_reward(rec.wth_before, rec.wth_after, rec.executed);

    rec.rsi_after = rsi_.update(next.prices);
    rec.terminal = check_terminal(wallet_, rec.wth_after, rec.q_sa, rec.rsi_after);

    if (rec.terminal != TerminalKind::none) {
        if (rec.terminal == TerminalKind::save) rec.sav_bonus = save_bonus(wallet_);
        rec.update = q_.update_terminal(state_, action.row(), rec.alpha, rec.reward + rec.sav_bonus, rng_);
        apply_terminal(wallet_, rec.terminal, rec.wth_after);
        rec.wallet_after = wallet_;
        // the following block is consumed by the transition; the next episode starts one further on
        block_ += 2;
        if ((block_ + 1) * kBlockSize > series_->size()) {
            finished_ = true;
        } else {
            ++episodes_;
            begin_episode();
        }
        return rec;
    }

    const VolumeAverages vol = volume_.update(next.volumes);
    const NmdCascade nmd = nmd_cascade(next.prices, config_.denom_floor);
    features_ = build_features(next, vol, rec.rsi_after, nmd);
    StateEvaluation next_state = q_.evaluate(features_);
    rec.update = q_.update_bootstrap(state_, action.row(), rec.alpha, rec.reward, config_.gamma, next_state, rng_);
    state_ = std::move(next_state);
    wth_ = rec.wth_after;
    ++block_;
    rec.wallet_after = wallet_;
    return rec;
}

nlohmann::ordered_json to_json(const StepRecord& r) {
    return {
        {"step", r.step},
        {"episode", r.episode},
        {"block", r.block},
        {"action", r.action.index()},
        {"executed", r.executed},
        {"fee_paid", r.fee_paid},
        {"price", r.price},
        {"next_price", r.next_price},
        {"eps", r.eps},
        {"alpha", r.alpha},
        {"wth_before", r.wth_before},
        {"wth_after", r.wth_after},
        {"reward", r.reward},
        {"sav_bonus", r.sav_bonus},
        {"q_sa", r.q_sa},
        {"rsi_after", r.rsi_after},
        {"terminal", std::string(to_string(r.terminal))},
        {"network", r.update.network},
        {"td_target", r.update.td_target},
        {"bootstrap", r.update.bootstrap},
        {"rescaled", r.update.row.rescaled},
        {"mon", r.wallet_after.mon},
        {"cns", r.wallet_after.cns},
        {"sav", r.wallet_after.sav},
        {"res", r.wallet_after.res},
        {"mlim", r.wallet_after.mlim},
    };
}

}  // namespace dqtrader
