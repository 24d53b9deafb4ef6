#include "dqtrader/double_q.hpp"

#include "dqtrader/errors.hpp"
#include "dqtrader/schedules.hpp"

namespace dqtrader {

DoubleQ::DoubleQ(FlnNetwork first, FlnNetwork second) : nets_{std::move(first), std::move(second)} {
    const auto a = nets_[0].shape();
    const auto b = nets_[1].shape();
    if (a.inputs != b.inputs || a.outputs != b.outputs) throw Error("double-Q networks must share input/output sizes");
}

StateEvaluation DoubleQ::evaluate(std::span<const double> features) const {
    StateEvaluation s;
    for (std::size_t k = 0; k < 2; ++k) s.act[k] = nets_[k].activate(features);
    requery(s);
    return s;
}

void DoubleQ::requery(StateEvaluation& s) const {
    for (std::size_t k = 0; k < 2; ++k) s.q[k] = nets_[k].q_values(s.act[k]);
    const auto n = static_cast<std::size_t>(s.q[0].size());
    s.q_avg.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        const auto i = static_cast<Eigen::Index>(a);
        s.q_avg[a] = (s.q[0](i) + s.q[1](i)) / 2.0;
    }
}

DoubleQUpdate DoubleQ::update_terminal(const StateEvaluation& state, std::size_t action_row, double alpha,
                                       double target, Rng& rng) {
    const std::size_t k = rng.uniform() < 0.5 ? 0 : 1;
    DoubleQUpdate u;
    u.network = static_cast<int>(k) + 1;
    u.td_target = target;
    u.q_sa = state.q[k](static_cast<Eigen::Index>(action_row));
    u.row = nets_[k].sgd_update(action_row, alpha, target, u.q_sa, state.act[k]);
    return u;
}

DoubleQUpdate DoubleQ::update_bootstrap(const StateEvaluation& state, std::size_t action_row, double alpha,
                                        double reward, double gamma, const StateEvaluation& next, Rng& rng) {
    const std::size_t k = rng.uniform() < 0.5 ? 0 : 1;
    const std::size_t other = 1 - k;
    const auto& q_self = next.q[k];
    const std::size_t greedy = argmax_last(std::span<const double>(q_self.data(), static_cast<std::size_t>(q_self.size())));
    DoubleQUpdate u;
    u.network = static_cast<int>(k) + 1;
    u.bootstrap = gamma * next.q[other](static_cast<Eigen::Index>(greedy));
    u.td_target = reward + u.bootstrap;
    u.q_sa = state.q[k](static_cast<Eigen::Index>(action_row));
    u.row = nets_[k].sgd_update(action_row, alpha, u.td_target, u.q_sa, state.act[k]);
    return u;
}

}  // namespace dqtrader
