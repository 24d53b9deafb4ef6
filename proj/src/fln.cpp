#include "dqtrader/fln.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dqtrader/errors.hpp"

namespace dqtrader {

namespace {

constexpr int kSnapshotVersion = 1;

FlnNetwork::Matrix uniform_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    FlnNetwork::Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = rng.uniform(-1.0, 1.0);
    return m;
}

}  // namespace

FlnNetwork::FlnNetwork(const FlnShape& shape, Rng& rng)
    : w_hidden_(uniform_matrix(shape.hidden, shape.inputs, rng)),
      w_out_(uniform_matrix(shape.outputs, shape.extended(), rng)) {
    for (Eigen::Index r = 0; r < w_hidden_.rows(); ++r) w_hidden_.row(r) /= w_hidden_.row(r).norm();
}

FlnNetwork::FlnNetwork(Matrix w_hidden, Matrix w_out, double maxw)
    : w_hidden_(std::move(w_hidden)), w_out_(std::move(w_out)), maxw_(maxw) {
    if (w_out_.cols() != w_hidden_.rows() + w_hidden_.cols())
        throw Error("output rows must span input + hidden components");
    if (!(maxw_ >= 1.0)) throw Error("maxw must be >= 1");
}

FlnShape FlnNetwork::shape() const noexcept {
    return {static_cast<std::size_t>(w_hidden_.cols()), static_cast<std::size_t>(w_hidden_.rows()),
            static_cast<std::size_t>(w_out_.rows())};
}

Activation FlnNetwork::activate(std::span<const double> input) const {
    const Eigen::Index n = w_hidden_.cols();
    if (static_cast<Eigen::Index>(input.size()) != n) throw Error("input size does not match network");
    const Eigen::Map<const Eigen::VectorXd> x(input.data(), n);
    Activation act;
    act.extended.resize(n + w_hidden_.rows());
    act.extended.head(n) = x;
    const Eigen::VectorXd z = w_hidden_ * x;
    act.extended.tail(w_hidden_.rows()) = z.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
    return act;
}

RowUpdate FlnNetwork::sgd_update(std::size_t output, double alpha, double td_target, double q_sa,
                                 const Activation& act) {
    if (output >= static_cast<std::size_t>(w_out_.rows())) throw Error("output index out of range");
    const double step = alpha * (td_target - q_sa);
    if (!std::isfinite(td_target) || !std::isfinite(step)) throw NumericError("non-finite TD target or step");

    Eigen::RowVectorXd row = w_out_.row(static_cast<Eigen::Index>(output)) + step * act.extended.transpose();
    RowUpdate info;
    info.raw_norm = row.norm();
    if (!std::isfinite(info.raw_norm)) throw NumericError("output row diverged");
    maxw_ = std::max(maxw_, info.raw_norm);
    if (info.raw_norm > 1.0) {
        row /= maxw_;
        info.rescaled = true;
    }
    w_out_.row(static_cast<Eigen::Index>(output)) = row;
    return info;
}

nlohmann::ordered_json FlnNetwork::snapshot(std::uint64_t seed) const {
    const auto s = shape();
    nlohmann::ordered_json j;
    j["format"] = "fln-snapshot";
    j["version"] = kSnapshotVersion;
    j["seed"] = seed;
    j["inputs"] = s.inputs;
    j["hidden"] = s.hidden;
    j["outputs"] = s.outputs;
    j["maxw"] = maxw_;
    j["w_hidden"] = std::vector<double>(w_hidden_.data(), w_hidden_.data() + w_hidden_.size());
    j["w_out"] = std::vector<double>(w_out_.data(), w_out_.data() + w_out_.size());
    return j;
}

FlnNetwork FlnNetwork::from_snapshot(const nlohmann::json& j) {
    if (j.value("format", "") != "fln-snapshot") throw Error("not an fln snapshot");
    if (j.value("version", 0) != kSnapshotVersion) throw Error("unsupported fln snapshot version");
    const auto inputs = j.at("inputs").get<Eigen::Index>();
    const auto hidden = j.at("hidden").get<Eigen::Index>();
    const auto outputs = j.at("outputs").get<Eigen::Index>();
    const auto wh = j.at("w_hidden").get<std::vector<double>>();
    const auto wo = j.at("w_out").get<std::vector<double>>();
    if (static_cast<Eigen::Index>(wh.size()) != hidden * inputs ||
        static_cast<Eigen::Index>(wo.size()) != outputs * (inputs + hidden))
        throw Error("fln snapshot arrays do not match declared shape");
    Matrix w_hidden = Eigen::Map<const Matrix>(wh.data(), hidden, inputs);
    Matrix w_out = Eigen::Map<const Matrix>(wo.data(), outputs, inputs + hidden);
    return FlnNetwork(std::move(w_hidden), std::move(w_out), j.at("maxw").get<double>());
}

}  // namespace dqtrader
