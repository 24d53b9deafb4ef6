#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dqtrader/harness.hpp"

namespace dqtrader {

/// Shortest decimal text that reads back to the same double.
std::string format_decimal(double value);

nlohmann::ordered_json report_json(const ExperimentResult& result);

/// Table rows (mean, median, std. dev., P(twth <= threshold), min, max) for one experiment.
std::string summary_table(const ExperimentResult& result);

/// Agent and random-baseline experiments on the same data side by side.
std::string comparison_table(const ExperimentResult& agent, const ExperimentResult& random);

/// Writes sav.txt, total.txt (one value per line, run order), report.json and
/// summary.txt into `dir`, creating it if needed. Throws IoError.
void emit_report(const ExperimentResult& result, const std::filesystem::path& dir);

/// Writes `text` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace dqtrader
