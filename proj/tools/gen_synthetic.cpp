// gen_synthetic: writes a random-walk kline CSV whose every row survives the 1% filter.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dqtrader/errors.hpp"
#include "dqtrader/report.hpp"
#include "dqtrader/synthetic.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate a synthetic kline CSV"};
    dqtrader::RandomWalkSpec spec;
    std::string out;
    app.add_option("--out", out, "output CSV path")->required();
    app.add_option("--rows", spec.rows, "raw rows (the filter keeps rows - 1 points)");
    app.add_option("--seed", spec.seed, "generator seed");
    app.add_option("--drift", spec.drift, "per-step multiplicative drift");
    app.add_option("--start-price", spec.start_price, "first price");
    CLI11_PARSE(app, argc, argv);

    try {
        dqtrader::write_text_file(out, dqtrader::to_kline_csv(dqtrader::random_walk_klines(spec)));
    } catch (const dqtrader::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}
