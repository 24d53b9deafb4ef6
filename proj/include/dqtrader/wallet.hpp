#pragma once

#include <cstddef>
#include <string_view>

namespace dqtrader {

inline constexpr int kActionCount = 19;

/// One of the 19 trading actions, numbered 1..19:
/// 1..9 buy for 10*k, 10..18 sell for 10*(k-9), 19 hold.
class Action {
public:
    constexpr explicit Action(int index) : index_(index) {}

    static constexpr Action hold() { return Action(kActionCount); }
    static constexpr Action from_row(std::size_t row) { return Action(static_cast<int>(row) + 1); }

    constexpr int index() const noexcept { return index_; }
    constexpr std::size_t row() const noexcept { return static_cast<std::size_t>(index_ - 1); }
    constexpr bool valid() const noexcept { return index_ >= 1 && index_ <= kActionCount; }
    constexpr bool is_buy() const noexcept { return index_ >= 1 && index_ <= 9; }
    constexpr bool is_sell() const noexcept { return index_ >= 10 && index_ <= 18; }
    constexpr bool is_hold() const noexcept { return index_ == kActionCount; }

    /// Quote-currency amount traded; 0 for hold.
    constexpr double amount() const noexcept {
        if (is_buy()) return 10.0 * index_;
        if (is_sell()) return 10.0 * (index_ - 9);
        return 0.0;
    }

    constexpr bool operator==(const Action&) const = default;

private:
    int index_;
};

/// Money pools of one run. sav never flows back into trading; res may.
struct Wallet {
    double mon = 100.0;   // trading pool
    double cns = 0.0;     // asset holdings
    double sav = 0.0;     // banked savings
    double res = 0.0;     // reserve pool
    double mlim = 100.0;  // savings trigger on mon
    double mlimn = 75.0;  // floor for mlim

    static Wallet initial(double mon, double mlimn) { return Wallet{mon, 0.0, 0.0, 0.0, mon, mlimn}; }

    double wealth(double price) const noexcept { return mon + price * cns; }
};

struct ActionOutcome {
    Action action = Action::hold();
    bool executed = true;  // false: insufficient funds, wallet untouched
    double fee_paid = 0.0;
};

/// Trades at `price`, charging `fee_rate` on the received side. A buy needs
/// mon >= amount, a sell needs cns*price >= amount; otherwise nothing changes.
ActionOutcome execute_action(Wallet& wallet, Action action, double price, double fee_rate);

/// d - (d/2)^2 with d the wealth change, minus 0.1 when the action failed.
double compute_reward(double wth_before, double wth_after, bool executed) noexcept;

enum class TerminalKind { none, save, reinvest, markdown };

std::string_view to_string(TerminalKind kind) noexcept;

/// Tested in order: save if mon > mlim; reinvest if wth_after < mlimn, q_sa > 0
/// and rsi_after > 70; markdown if wth_after >= mlimn, q_sa < 0 and rsi_after < 30.
TerminalKind check_terminal(const Wallet& wallet, double wth_after, double q_sa, double rsi_after) noexcept;

/// Part of the excess mdf = mon - mlim a save terminal banks into sav.
/// Shares are taken as whole percentages, (mdf * 34) / 100, which keeps
/// round decimal amounts exact.
double save_bonus(const Wallet& wallet) noexcept;

/// Moves money between pools for a terminal state. Returns the amount added to
/// sav (the extra reward of a save terminal), 0 for the other kinds.
double apply_terminal(Wallet& wallet, TerminalKind kind, double wth_after) noexcept;

}  // namespace dqtrader
