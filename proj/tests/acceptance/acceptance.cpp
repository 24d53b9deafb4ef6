// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dqtrader/agent.hpp"
#include "dqtrader/data_ingest.hpp"
#include "dqtrader/features.hpp"
#include "dqtrader/fln.hpp"
#include "dqtrader/harness.hpp"
#include "dqtrader/report.hpp"
#include "dqtrader/schedules.hpp"
#include "dqtrader/stats.hpp"
#include "dqtrader/synthetic.hpp"
#include "dqtrader/wallet.hpp"
#include "oracles.hpp"
#include "toy_mdp.hpp"

using namespace dqtrader;
namespace fs = std::filesystem;

namespace {

const fs::path kDataset = fs::path(DQTRADER_DATA_DIR) / "synthetic_5000.csv";

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first failed check of a criterion.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && pass_) {
            pass_ = false;
            failure_ = what;
        }
    }
    void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
    Outcome outcome() const { return {pass_, pass_ ? notes_ : failure_ + (notes_.empty() ? "" : " | " + notes_)}; }

private:
    bool pass_ = true;
    std::string failure_;
    std::string notes_;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome ac00_defaults() {
    Checker c;
    const Config d;
    c.expect(d.filter_threshold == 0.01, "filter threshold");
    c.expect(d.initial_mon == 100.0, "initial mon");
    c.expect(d.gamma == 0.05, "gamma");
    c.expect(d.mlimn == 75.0, "mlimn");
    c.expect(d.prob_eps == 1e-4, "prob_eps");
    c.expect(d.alpha_min == 1e-3 && d.alpha_max == 1.0 && d.t_alpha == 1000, "alpha schedule");
    c.expect(d.hidden_size == 50, "hidden size");
    c.expect(d.fee_rate == 0.001, "fee rate");
    c.expect(ExperimentConfig{}.runs == 1000, "default run count");
    const Wallet w = Wallet::initial(d.initial_mon, d.mlimn);
    c.expect(w.mon == 100.0 && w.cns == 0.0 && w.sav == 0.0 && w.res == 0.0 && w.mlim == 100.0, "initial wallet");
    return c.outcome();
}

Outcome ac01_filter() {
    Checker c;
    RandomWalkSpec spec;
    spec.rows = 10000;
    spec.seed = 101;
    spec.min_step = 0.0;
    spec.max_step = 0.02;
    const std::string csv = to_kline_csv(random_walk_klines(spec));

    const Stopwatch sw;
    const auto raw = parse_klines_text(csv);
    const auto s = filter_series(raw, 0.01);
    const double elapsed = sw.seconds();

    std::size_t violations = 0;
    for (std::size_t k = 1; k < s.size(); ++k)
        if (!(std::abs(s.prices[k] - s.prices[k - 1]) / s.prices[k - 1] > 0.01)) ++violations;
    c.expect(raw.size() == 10000, "input size");
    c.expect(violations == 0, std::to_string(violations) + " retained pairs within 1%");
    c.expect(elapsed < 1.0, "runtime " + num(elapsed) + " s");
    c.note(std::to_string(s.size()) + " of 10000 retained, " + num(elapsed * 1e3) + " ms");
    return c.outcome();
}

Outcome ac02_rsi() {
    Checker c;
    Rng rng(202);
    RsiState rsi;
    double lo = 100.0;
    double hi = 0.0;
    for (int t = 0; t < 10000; ++t) {
        PriceBlock pr;
        for (double& p : pr) p = rng.uniform(0.1, 10.0);
        const double v = rsi.update(pr);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        c.expect(v >= 0.0 && v <= 100.0, "rsi out of range: " + num(v));
    }
    RsiState up;
    for (int b = 0; b < 3; ++b) {
        PriceBlock pr;
        for (int j = 0; j < 5; ++j) pr[static_cast<std::size_t>(j)] = 1.0 + 5 * b + j;
        c.expect(up.update(pr) == 100.0, "monotone-up window");
    }
    RsiState down;
    double last = -1.0;
    for (int b = 0; b < 3; ++b) {
        PriceBlock pr;
        for (int j = 0; j < 5; ++j) pr[static_cast<std::size_t>(j)] = 100.0 - 5 * b - j;
        last = down.update(pr);
    }
    c.expect(last == 0.0, "monotone-down window gave " + num(last));
    c.note("range over 10^4 updates [" + num(lo) + ", " + num(hi) + "]");
    return c.outcome();
}

Outcome ac03_reward() {
    Checker c;
    Rng rng(303);
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < 1000000; ++t) {
        const double before = rng.uniform(0.0, 1000.0);
        const double after = before + rng.uniform(-100.0, 100.0) * std::pow(rng.uniform(), 3.0);
        const double r = compute_reward(before, after, true);
        worst = std::max(worst, r);
        c.expect(r <= 1.0, "reward above 1: " + num(r));
    }
    const double peak = compute_reward(100.0, 102.0, true);
    c.expect(std::abs(peak - 1.0) <= 1e-12, "reward(d=2) = " + num(peak));
    c.note("max fuzzed reward " + num(worst));
    return c.outcome();
}

Outcome ac04_conservation() {
    Checker c;
    Rng rng(404);
    double worst_free = 0.0;
    double worst_fee = 0.0;
    for (double fee : {0.0, 0.001, 0.0075}) {
        int executed = 0;
        while (executed < 10000) {
            Wallet w{rng.uniform(0.0, 300.0), rng.uniform(0.0, 500.0), 0.0, 0.0, 100.0, 75.0};
            const double price = rng.uniform(0.05, 5.0);
            const Action a(static_cast<int>(rng.uniform_int(1, 18)));
            const double before = w.wealth(price);
            if (!execute_action(w, a, price, fee).executed) continue;
            ++executed;
            const double drop = before - w.wealth(price);
            const double err = std::abs(drop - fee * a.amount());
            (fee == 0.0 ? worst_free : worst_fee) = std::max(fee == 0.0 ? worst_free : worst_fee, err);
            c.expect(err <= 1e-9, "wealth drop off by " + num(err) + " at fee " + num(fee));
            c.expect(w.mon >= 0.0 && w.cns >= 0.0, "negative pool");
        }
    }
    c.note("max error zero fee " + num(worst_free) + ", with fee " + num(worst_fee));
    return c.outcome();
}

Outcome ac05_gradient() {
    Checker c;
    const auto raw = parse_klines(kDataset);
    const auto series = filter_series(raw, 0.01);
    TradingAgent agent(series, Config{}, 505);
    double worst = 0.0;
    std::size_t checked = 0;
    for (int state = 0; state < 4; ++state) {
        for (int k = 0; k < 37 && agent.can_step(); ++k) agent.learning_step();
        const auto& x = agent.features();
        for (int which = 1; which <= 2; ++which) {
            const FlnNetwork& net = agent.networks().network(which);
            const auto act = net.activate(x);
            for (std::size_t out = 0; out < 19; ++out) {
                std::vector<double> row(77);
                for (std::size_t j = 0; j < 77; ++j)
                    row[j] = net.w_out()(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(j));
                const auto q_of = [&](const std::vector<double>& w) {
                    FlnNetwork::Matrix wo = net.w_out();
                    for (std::size_t j = 0; j < 77; ++j)
                        wo(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(j)) = w[j];
                    return FlnNetwork(net.w_hidden(), wo, net.maxw()).q_value(out, act);
                };
                for (std::size_t j = 0; j < 77; ++j) {
                    const double g = act.extended(static_cast<Eigen::Index>(j));
                    const double fd = oracle::central_difference(q_of, row, j, 1e-3);
                    const double rel = g == 0.0 ? std::abs(fd) : std::abs(fd - g) / std::abs(g);
                    worst = std::max(worst, rel);
                    ++checked;
                    c.expect(rel <= 1e-6, "dQ/dw mismatch " + num(rel) + " at output " + std::to_string(out));
                }
            }
        }
    }
    c.note(std::to_string(checked) + " partials, max relative error " + num(worst));
    return c.outcome();
}

Outcome ac06_renormalization() {
    Checker c;
    Rng rng(606);
    FlnNetwork net(FlnShape{}, rng);
    double prev = net.maxw();
    int fired = 0;
    double worst_after = 0.0;
    for (int t = 0; t < 10000; ++t) {
        std::vector<double> x(27);
        for (double& v : x) v = rng.uniform(-6.0, 6.0);
        const auto act = net.activate(x);
        const auto k = static_cast<std::size_t>(rng.uniform_int(0, 18));
        const double alpha = rng.uniform(1.0, 1000.0);
        const double target = rng.uniform(-1e3, 1e3);
        const auto info = net.sgd_update(k, alpha, target, net.q_value(k, act), act);
        c.expect(net.maxw() >= prev, "maxw decreased");
        prev = net.maxw();
        if (info.rescaled) {
            ++fired;
            const double norm = net.w_out().row(static_cast<Eigen::Index>(k)).norm();
            worst_after = std::max(worst_after, norm);
            c.expect(norm <= 1.0 + 1e-12, "row norm " + num(norm) + " after rescale");
        }
    }
    c.expect(fired > 0, "rescale branch never fired");
    c.note(std::to_string(fired) + " rescales, max norm after " + num(worst_after) + ", final maxw " + num(prev));
    return c.outcome();
}

Outcome ac07_schedules() {
    Checker c;
    AlphaSchedule alpha;
    c.expect(alpha.step() == 1.0, "alpha(0)");
    c.expect(std::abs(alpha.value_at(1000) - 0.001) <= 1e-12, "alpha(T) = " + num(alpha.value_at(1000)));
    double worst = 0.0;
    for (long i = 0; i <= 20000; ++i) worst = std::max(worst, std::abs(alpha.value_at(i) - alpha.value_at(i + 2000)));
    c.expect(worst <= 1e-12, "alpha period error " + num(worst));

    Rng rng(707);
    EpsilonSchedule eps(1e-3);
    double prev = eps.step(rng);
    int prev_counter = eps.counter();
    int resets = 0;
    for (int t = 0; t < 200000; ++t) {
        const double e = eps.step(rng);
        if (eps.counter() == prev_counter + 1) {
            c.expect(e < prev, "eps not strictly decreasing at counter " + std::to_string(eps.counter()));
        } else {
            ++resets;
            c.expect(std::abs(e - 1.0 / std::log(152.0)) <= 1e-12, "eps after reset " + num(e));
        }
        prev = e;
        prev_counter = eps.counter();
    }
    c.expect(resets > 0, "no reset observed");
    c.note("alpha period error " + num(worst) + ", " + std::to_string(resets) + " eps resets");
    return c.outcome();
}

Outcome ac08_terminal() {
    Checker c;
    Wallet w{110.0, 0.0, 0.0, 0.0, 100.0, 75.0};
    const double bonus = apply_terminal(w, TerminalKind::save, 110.0);
    c.expect(w.sav == 3.4, "sav " + format_decimal(w.sav));
    c.expect(w.res == 3.3, "res " + format_decimal(w.res));
    c.expect(w.mon == 103.3, "mon " + format_decimal(w.mon));
    c.expect(w.mlim == 113.3, "mlim " + format_decimal(w.mlim));
    c.expect(bonus == 3.4, "bonus " + format_decimal(bonus));

    Rng rng(808);
    double worst = 0.0;
    for (int t = 0; t < 100000; ++t) {
        const double mlim = rng.uniform(75.0, 1000.0);
        const double mon = mlim + rng.uniform(0.0, 500.0);
        Wallet f{mon, 0.0, rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0), mlim, 75.0};
        const Wallet b = f;
        apply_terminal(f, TerminalKind::save, mon);
        const double mdf = mon - mlim;
        const double scale = std::max(1.0, mon);
        const double e = std::max({std::abs(f.sav - b.sav - 0.34 * mdf), std::abs(f.res - b.res - 0.33 * mdf),
                                   std::abs(f.mon - b.mlim - 0.33 * mdf),
                                   std::abs((f.sav - b.sav) + (f.res - b.res) + (f.mon - b.mon))}) /
                         scale;
        worst = std::max(worst, e);
        c.expect(e <= 1e-12, "decomposition error " + num(e));
    }
    c.note("fuzzed max relative error " + num(worst));
    return c.outcome();
}

Outcome ac09_double_q() {
    Checker c;
    const Stopwatch sw;
    const auto result = toy::train(toy::three_state_mdp(), 0.05, 100000, 0.01, 0.5, 909);
    const double elapsed = sw.seconds();
    c.expect(result.max_error <= 1e-2, "max |Q - Q*| = " + num(result.max_error));
    c.expect(elapsed < 30.0, "runtime " + num(elapsed) + " s");
    c.note("max |Q - Q*| " + num(result.max_error) + " after 10^5 steps, " + num(elapsed) + " s");
    return c.outcome();
}

Outcome ac10_martingale() {
    Checker c;
    const Stopwatch sw;
    ExperimentConfig cfg;
    cfg.mode = RunMode::random;
    cfg.params.fee_rate = 0.0;
    cfg.master_seed = 1010;
    // the baseline's expectation is over price paths, so every run gets its own zero-drift path
    std::vector<double> twth;
    for (std::size_t r = 0; r < 500; ++r) {
        RandomWalkSpec spec;
        spec.rows = 5001;
        spec.seed = derive_stream_seed(cfg.master_seed ^ 0xA5A5A5A5ULL, r);
        const auto series = filter_series(random_walk_klines(spec), 0.01);
        twth.push_back(run_once(cfg, series, r).final_twth);
    }
    const auto stats = aggregate(twth);
    const double se = stats.std_dev / std::sqrt(static_cast<double>(stats.n));
    const double z = (stats.mean - 100.0) / se;
    const double elapsed = sw.seconds();
    c.expect(std::abs(z) <= 3.0, "mean " + num(stats.mean) + " is " + num(z) + " SE from 100");
    c.expect(elapsed < 120.0, "runtime " + num(elapsed) + " s");
    c.note("mean " + num(stats.mean) + ", SE " + num(se) + ", z " + num(z) + ", " + num(elapsed) + " s");
    return c.outcome();
}

struct Emitted {
    std::string total, sav, report;
    double seconds = 0.0;
};

Emitted run_and_emit(std::size_t workers, const fs::path& dir) {
    const Stopwatch sw;
    ExperimentConfig cfg;
    cfg.data_path = kDataset;
    cfg.runs = 100;
    cfg.master_seed = 1111;
    cfg.workers = workers;
    const auto result = run_experiment(cfg);
    emit_report(result, dir);
    Emitted e{read_file(dir / "total.txt"), read_file(dir / "sav.txt"), read_file(dir / "report.json"), sw.seconds()};
    return e;
}

Outcome ac11_determinism() {
    Checker c;
    const auto base = fs::temp_directory_path() / "dqtrader_acceptance_determinism";
    fs::remove_all(base);
    const std::size_t many = std::max(2u, std::thread::hardware_concurrency());
    const auto a = run_and_emit(1, base / "a");
    const auto b = run_and_emit(many, base / "b");
    const auto d = run_and_emit(3, base / "c");
    fs::remove_all(base);
    for (const auto* other : {&b, &d}) {
        c.expect(a.total == other->total, "total.txt differs");
        c.expect(a.sav == other->sav, "sav.txt differs");
        c.expect(a.report == other->report, "report differs");
    }
    for (const auto* e : {&a, &b, &d}) c.expect(e->seconds < 120.0, "runtime " + num(e->seconds) + " s");
    c.note("1/" + std::to_string(many) + "/3 workers: " + num(a.seconds) + " s, " + num(b.seconds) + " s, " +
           num(d.seconds) + " s");
    return c.outcome();
}

Outcome ac12_smoke() {
    Checker c;
    ExperimentConfig cfg;
    cfg.data_path = kDataset;
    cfg.runs = 100;
    cfg.master_seed = 1212;
    cfg.workers = 0;
    const auto result = run_experiment(cfg);
    c.expect(result.series_length == 5000, "dataset has " + std::to_string(result.series_length) + " points");
    for (const auto& r : result.runs) {
        c.expect(std::isfinite(r.final_twth) && std::isfinite(r.final_sav), "non-finite run result");
        c.expect(r.final_sav >= 0.0, "negative sav");
    }
    for (const auto* s : {&result.twth, &*result.sav}) {
        c.expect(std::isfinite(s->mean) && std::isfinite(s->median) && std::isfinite(s->std_dev) &&
                     std::isfinite(s->min) && std::isfinite(s->max),
                 "non-finite statistic");
        c.expect(s->p_loss >= 0.0 && s->p_loss <= 1.0, "p_loss out of [0, 1]");
    }
    const auto j = report_json(result);
    c.expect(!j.dump().empty(), "empty report");
    c.note("mean twth " + num(result.twth.mean) + ", median " + num(result.twth.median) + ", p_loss " +
           num(result.twth.p_loss) + ", mean sav " + num(result.sav->mean));
    return c.outcome();
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC-00 protocol defaults", ac00_defaults},
        {"AC-01 filter guarantee on 10^4 points", ac01_filter},
        {"AC-02 RSI bounds and monotone windows", ac02_rsi},
        {"AC-03 reward bound", ac03_reward},
        {"AC-04 trade conservation and fee accounting", ac04_conservation},
        {"AC-05 FLN gradient check", ac05_gradient},
        {"AC-06 max-norm renormalization", ac06_renormalization},
        {"AC-07 schedules", ac07_schedules},
        {"AC-08 terminal arithmetic", ac08_terminal},
        {"AC-09 double-Q toy MDP oracle", ac09_double_q},
        {"AC-10 martingale random baseline", ac10_martingale},
        {"AC-11 determinism across worker counts", ac11_determinism},
        {"AC-12 end-to-end smoke", ac12_smoke},
    };

    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("%s  %-46s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
