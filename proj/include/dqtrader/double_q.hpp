#pragma once

#include <array>
#include <span>
#include <vector>

#include "dqtrader/fln.hpp"
#include "dqtrader/rng.hpp"

namespace dqtrader {

/// Both networks' view of one state.
struct StateEvaluation {
    std::array<Activation, 2> act;
    std::array<Eigen::VectorXd, 2> q;
    std::vector<double> q_avg;  // (Q1 + Q2) / 2
};

struct DoubleQUpdate {
    int network = 0;         // 1 or 2
    double td_target = 0.0;  // reward (+ bootstrap)
    double bootstrap = 0.0;  // gamma * Q_other(s', argmax Q_self(s', .)); 0 for terminal updates
    double q_sa = 0.0;       // the updated network's Q(s, a) before the step
    RowUpdate row;
};

/// Pair of independent FLNs trained with double Q-learning. Each update flips a
/// fair coin to pick the network that learns; a bootstrapped target evaluates
/// the learner's greedy next action with the other network.
class DoubleQ {
public:
    DoubleQ(FlnNetwork first, FlnNetwork second);

    StateEvaluation evaluate(std::span<const double> features) const;

    /// Recomputes the Q-values of `state` from its stored activations, e.g. after an update.
    void requery(StateEvaluation& state) const;

    DoubleQUpdate update_terminal(const StateEvaluation& state, std::size_t action_row, double alpha,
                                  double target, Rng& rng);

    DoubleQUpdate update_bootstrap(const StateEvaluation& state, std::size_t action_row, double alpha,
                                   double reward, double gamma, const StateEvaluation& next, Rng& rng);

    const FlnNetwork& network(int which) const { return nets_.at(static_cast<std::size_t>(which - 1)); }

private:
    std::array<FlnNetwork, 2> nets_;
};

}  // namespace dqtrader
