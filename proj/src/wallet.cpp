#include "dqtrader/wallet.hpp"

#include <algorithm>

namespace dqtrader {

ActionOutcome execute_action(Wallet& w, Action action, double price, double fee_rate) {
    ActionOutcome out{action, true, 0.0};
    const double amount = action.amount();
    if (action.is_buy()) {
        if (w.mon < amount) {
            out.executed = false;
            return out;
        }
        w.mon -= amount;
        w.cns += (1.0 - fee_rate) * amount / price;
        out.fee_paid = fee_rate * amount;
    } else if (action.is_sell()) {
        if (w.cns * price < amount) {
            out.executed = false;
            return out;
        }
        // cns*price >= amount, so only rounding can push this below zero
        w.cns = std::max(0.0, w.cns - amount / price);
        w.mon += (1.0 - fee_rate) * amount;
        out.fee_paid = fee_rate * amount;
    }
    return out;
}

double compute_reward(double wth_before, double wth_after, bool executed) noexcept {
    const double d = wth_after - wth_before;
    const double half = d / 2.0;
    double reward = d - half * half;
    if (!executed) reward -= 0.1;
    return reward;
}

std::string_view to_string(TerminalKind kind) noexcept {
    switch (kind) {
        case TerminalKind::none: return "none";
        case TerminalKind::save: return "save";
        case TerminalKind::reinvest: return "reinvest";
        case TerminalKind::markdown: return "markdown";
    }
    return "none";
}

TerminalKind check_terminal(const Wallet& w, double wth_after, double q_sa, double rsi_after) noexcept {
    if (w.mon > w.mlim) return TerminalKind::save;
    if (wth_after < w.mlimn && q_sa > 0.0 && rsi_after > 70.0) return TerminalKind::reinvest;
    if (wth_after >= w.mlimn && q_sa < 0.0 && rsi_after < 30.0) return TerminalKind::markdown;
    return TerminalKind::none;
}

double save_bonus(const Wallet& w) noexcept { return (w.mon - w.mlim) * 34.0 / 100.0; }

double apply_terminal(Wallet& w, TerminalKind kind, double wth_after) noexcept {
    switch (kind) {
        case TerminalKind::save: {
            const double mdf = w.mon - w.mlim;
            const double banked = save_bonus(w);
            const double kept = mdf * 33.0 / 100.0;
            w.sav += banked;
            w.res += kept;
            w.mon = w.mlim + kept;
            w.mlim = w.mon + mdf;
            return banked;
        }
        case TerminalKind::reinvest: {
            const double half = w.res / 2.0;
            w.mon += half;
            w.res -= half;
            w.mlim = std::max(w.mlimn, w.mon);
            return 0.0;
        }
        case TerminalKind::markdown:
            w.mlim = wth_after;
            return 0.0;
        case TerminalKind::none:
            break;
    }
    return 0.0;
}

}  // namespace dqtrader
