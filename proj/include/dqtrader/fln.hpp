#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>

#include <Eigen/Core>
#include <json.hpp>

#include "dqtrader/rng.hpp"

namespace dqtrader {

struct FlnShape {
    std::size_t inputs = 27;
    std::size_t hidden = 50;
    std::size_t outputs = 19;

    std::size_t extended() const noexcept { return inputs + hidden; }
};

/// Input followed by the hidden-layer outputs. This is both the vector the output
/// rows are dotted with and the gradient of every Q_k with respect to its row.
struct Activation {
    Eigen::VectorXd extended;
};

struct RowUpdate {
    double raw_norm = 0.0;  // row norm right after the gradient step
    bool rescaled = false;  // true when the row was divided by maxw
};

/// Fast Learning Network: a fixed random logistic hidden layer in parallel with a
/// direct linear path. Only the output rows are trained; all biases are zero.
class FlnNetwork {
public:
    using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    /// Hidden and output weights uniform on [-1, 1); hidden rows then scaled to unit norm.
    FlnNetwork(const FlnShape& shape, Rng& rng);

    /// Explicit weights, mainly for tests and snapshot loading.
    FlnNetwork(Matrix w_hidden, Matrix w_out, double maxw = 1.0);

    FlnShape shape() const noexcept;

    Activation activate(std::span<const double> input) const;

    Eigen::VectorXd q_values(const Activation& act) const { return w_out_ * act.extended; }
    double q_value(std::size_t output, const Activation& act) const { return w_out_.row(output).dot(act.extended); }

    /// Gradient step on row `output` towards `td_target`, then max-norm control:
    /// maxw tracks the largest row norm ever seen in this network, and a row whose
    /// norm exceeds 1 is divided by maxw. Throws NumericError (network untouched)
    /// when the step would be non-finite.
    RowUpdate sgd_update(std::size_t output, double alpha, double td_target, double q_sa, const Activation& act);

    const Matrix& w_hidden() const noexcept { return w_hidden_; }
    const Matrix& w_out() const noexcept { return w_out_; }
    double maxw() const noexcept { return maxw_; }

    /// Versioned JSON snapshot (row-major flat arrays).
    nlohmann::ordered_json snapshot(std::uint64_t seed) const;
    static FlnNetwork from_snapshot(const nlohmann::json& j);

private:
    Matrix w_hidden_;
    Matrix w_out_;
    double maxw_ = 1.0;
};

}  // namespace dqtrader
