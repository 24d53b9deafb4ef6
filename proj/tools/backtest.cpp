// backtest: Monte-Carlo evaluation of the online double-Q trader on kline data.
//
//   backtest --data klines.csv --mode agent --runs 1000 --seed 7 --out results/
//   backtest --data klines.csv --slice 0:20000 --mode both --runs 1000 --out results/
//
// Exit codes: 0 success, 2 usage/config error, 3 data error, 4 I/O error, 1 other.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqtrader/config.hpp"
#include "dqtrader/errors.hpp"
#include "dqtrader/harness.hpp"
#include "dqtrader/report.hpp"

namespace {

enum ExitCode { kOk = 0, kOther = 1, kConfig = 2, kData = 3, kIo = 4 };

dqtrader::ExperimentResult run_mode(dqtrader::ExperimentConfig config, dqtrader::RunMode mode,
                                    const dqtrader::FilteredSeries& series, const std::filesystem::path& out,
                                    bool trace) {
    config.mode = mode;
    std::ofstream trace_file;
    dqtrader::TraceSink sink;
    if (trace && mode == dqtrader::RunMode::agent) {
        std::filesystem::create_directories(out);
        trace_file.open(out / "trace.jsonl", std::ios::trunc);
        if (!trace_file) throw dqtrader::IoError("cannot write " + (out / "trace.jsonl").string());
        sink = [&](const dqtrader::StepRecord& rec) { trace_file << dqtrader::to_json(rec).dump() << '\n'; };
    }
    auto result = dqtrader::run_experiment(config, series, sink);
    dqtrader::emit_report(result, out);
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte-Carlo backtest of the online double-Q trading agent"};

    std::string data;
    std::string slice;
    std::string mode = "agent";
    std::string label;
    std::size_t runs = 1000;
    std::uint64_t seed = 0;
    std::string out = "results";
    std::string config_path;
    std::size_t workers = 0;
    bool trace = false;

    app.add_option("--data", data, "kline CSV file")->required();
    app.add_option("--slice", slice, "start:end range of the filtered series");
    app.add_option("--label", label, "free-text name for the slice");
    app.add_option("--mode", mode, "agent, random, or both")->check(CLI::IsMember({"agent", "random", "both"}));
    app.add_option("--runs", runs, "number of runs")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "master seed");
    app.add_option("--out", out, "output directory");
    app.add_option("--config", config_path, "JSON file overriding config keys");
    app.add_option("--workers", workers, "worker threads (0 = all cores)");
    app.add_flag("--trace", trace, "write per-step trace of run 0 to trace.jsonl");

    CLI11_PARSE(app, argc, argv);

    try {
        dqtrader::ExperimentConfig config;
        config.data_path = data;
        if (!slice.empty()) config.slice = slice;
        config.label = label;
        config.runs = runs;
        config.master_seed = seed;
        config.workers = workers;
        if (!config_path.empty()) config.params = dqtrader::load_config(config_path);
        config.validate();

        const auto series = dqtrader::load_series(config);
        std::cerr << "filtered series: " << series.size() << " points\n";
        const std::filesystem::path out_dir(out);

        if (mode == "both") {
            const auto agent = run_mode(config, dqtrader::RunMode::agent, series, out_dir / "agent", trace);
            const auto random = run_mode(config, dqtrader::RunMode::random, series, out_dir / "random", false);
            const std::string table = dqtrader::comparison_table(agent, random);
            dqtrader::write_text_file(out_dir / "summary.txt", table);
            std::cout << table;
        } else {
            const auto result = run_mode(config, dqtrader::parse_run_mode(mode), series, out_dir, trace);
            std::cout << dqtrader::summary_table(result);
        }
    } catch (const dqtrader::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const dqtrader::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const dqtrader::Error& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOther;
    }
    return kOk;
}
