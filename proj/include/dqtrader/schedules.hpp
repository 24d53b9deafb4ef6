#pragma once

#include <span>

#include "dqtrader/rng.hpp"
#include "dqtrader/wallet.hpp"

namespace dqtrader {

/// Counter value the epsilon schedule resets to: ceil((e^5 - 2) / 5) = 30,
/// i.e. epsilon = 1/ln(152), about 0.2.
int epsilon_reset_counter() noexcept;

/// Decaying exploration rate eps = 1/ln(5 i + 2) with occasional resets.
class EpsilonSchedule {
public:
    explicit EpsilonSchedule(double prob_reset = 1e-4) : prob_reset_(prob_reset) {}

    /// Draws one uniform; with probability prob_reset and a counter already at or
    /// past the reset value the counter jumps back to it, otherwise it increments.
    double step(Rng& rng);

    int counter() const noexcept { return counter_; }
    void set_counter(int counter) noexcept { counter_ = counter; }

    static double value_at(int counter);

private:
    double prob_reset_;
    int counter_ = 0;
};

/// Cosine-cyclical learning rate with period 2*t_alpha steps.
class AlphaSchedule {
public:
    AlphaSchedule(double alpha_min = 1e-3, double alpha_max = 1.0, int t_alpha = 1000)
        : alpha_min_(alpha_min), alpha_max_(alpha_max), t_alpha_(t_alpha) {}

    /// Increments the counter (starting from -1) and returns alpha at the new value.
    double step() noexcept { return value_at(++counter_); }

    double value_at(long counter) const noexcept;
    long counter() const noexcept { return counter_; }

private:
    double alpha_min_;
    double alpha_max_;
    int t_alpha_;
    long counter_ = -1;
};

/// Index of the largest entry, preferring the highest index among ties.
std::size_t argmax_last(std::span<const double> values);

/// Epsilon-greedy over averaged Q-values: one uniform draw decides exploration
/// (always when eps >= 1); exploring picks uniformly among all actions.
Action select_action(std::span<const double> q_avg, double eps, Rng& rng);

}  // namespace dqtrader
