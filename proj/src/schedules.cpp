#include "dqtrader/schedules.hpp"

#include <cmath>
#include <numbers>

namespace dqtrader {

int epsilon_reset_counter() noexcept {
    static const int value = static_cast<int>(std::ceil((std::exp(5.0) - 2.0) / 5.0));
    return value;
}

double EpsilonSchedule::value_at(int counter) { return 1.0 / std::log(5.0 * counter + 2.0); }

double EpsilonSchedule::step(Rng& rng) {
    const int reset = epsilon_reset_counter();
    const double draw = rng.uniform();
    if (draw < prob_reset_ && counter_ >= reset)
        counter_ = reset;
    else
        ++counter_;
    return value_at(counter_);
}

double AlphaSchedule::value_at(long counter) const noexcept {
    const double phase = static_cast<double>(counter) / t_alpha_ * std::numbers::pi;
    return alpha_min_ + 0.5 * (alpha_max_ - alpha_min_) * (1.0 + std::cos(phase));
}

std::size_t argmax_last(std::span<const double> values) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < values.size(); ++k)
        if (values[k] >= values[best]) best = k;
    return best;
}

Action select_action(std::span<const double> q_avg, double eps, Rng& rng) {
    if (rng.uniform() < eps) return Action(static_cast<int>(rng.uniform_int(1, static_cast<int>(q_avg.size()))));
    return Action::from_row(argmax_last(q_avg));
}

}  // namespace dqtrader
