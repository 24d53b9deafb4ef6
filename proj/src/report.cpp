#include "dqtrader/report.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dqtrader/errors.hpp"

namespace dqtrader {

std::string format_decimal(double value) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw Error("cannot format value");
    return std::string(buf.data(), ptr);
}

nlohmann::ordered_json report_json(const ExperimentResult& r) {
    nlohmann::ordered_json j;
    j["format"] = "dqtrader-report";
    j["version"] = 1;
    auto& exp = j["experiment"];
    exp["data"] = r.config.data_path.string();
    exp["slice"] = r.config.slice ? nlohmann::ordered_json(*r.config.slice) : nlohmann::ordered_json(nullptr);
    exp["label"] = r.config.label;
    exp["mode"] = std::string(to_string(r.config.mode));
    exp["runs"] = r.config.runs;
    exp["seed"] = r.config.master_seed;
    exp["series_length"] = r.series_length;
    j["config"] = to_json(r.config.params);
    j["loss_threshold"] = r.config.params.initial_mon;
    j["twth"] = to_json(r.twth);
    j["twth_histogram"] = to_json(r.twth_histogram);
    j["sav"] = r.sav ? to_json(*r.sav) : nlohmann::ordered_json(nullptr);
    j["sav_histogram"] = r.sav_histogram ? to_json(*r.sav_histogram) : nlohmann::ordered_json(nullptr);
    return j;
}

namespace {

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

void table_header(std::ostringstream& os, double threshold) {
    char buf[256];
    const std::string loss = "P(twth<=" + format_decimal(threshold) + ")";
    std::snprintf(buf, sizeof buf, "%-18s %12s %12s %12s %14s %12s %12s\n", "", "Mean", "Median", "St. Dev.",
                  loss.c_str(), "Min", "Max");
    os << buf;
}

void table_row(std::ostringstream& os, const std::string& name, const AggregateStats& s, bool with_loss) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-18s %12s %12s %12s %14s %12s %12s\n", name.c_str(), fixed3(s.mean).c_str(),
                  fixed3(s.median).c_str(), fixed3(s.std_dev).c_str(), with_loss ? fixed3(s.p_loss).c_str() : "-",
                  fixed3(s.min).c_str(), fixed3(s.max).c_str());
    os << buf;
}

void describe(std::ostringstream& os, const ExperimentResult& r) {
    os << "data: " << r.config.data_path.string();
    if (r.config.slice) os << " [" << *r.config.slice << "]";
    if (!r.config.label.empty()) os << " (" << r.config.label << ")";
    os << "\nfiltered points: " << r.series_length << "  runs: " << r.config.runs
       << "  seed: " << r.config.master_seed << "\n\n";
}

}  // namespace

std::string summary_table(const ExperimentResult& r) {
    std::ostringstream os;
    describe(os, r);
    os << "mode: " << to_string(r.config.mode) << "\n";
    table_header(os, r.config.params.initial_mon);
    table_row(os, r.config.mode == RunMode::agent ? "Non-random twth" : "Random twth", r.twth, true);
    if (r.sav) table_row(os, "sav", *r.sav, false);
    return os.str();
}

std::string comparison_table(const ExperimentResult& agent, const ExperimentResult& random) {
    std::ostringstream os;
    describe(os, agent);
    table_header(os, agent.config.params.initial_mon);
    table_row(os, "Non-random twth", agent.twth, true);
    table_row(os, "Random twth", random.twth, true);
    if (agent.sav) table_row(os, "sav", *agent.sav, false);
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    out.close();
    if (!out) throw IoError("write failed for " + path.string());
}

void emit_report(const ExperimentResult& r, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

    std::string sav;
    std::string total;
    for (const auto& run : r.runs) {
        sav += format_decimal(run.final_sav) + '\n';
        total += format_decimal(run.final_twth) + '\n';
    }
    write_text_file(dir / "sav.txt", sav);
    write_text_file(dir / "total.txt", total);
    write_text_file(dir / "report.json", report_json(r).dump(2) + '\n');
    write_text_file(dir / "summary.txt", summary_table(r));
}

}  // namespace dqtrader
