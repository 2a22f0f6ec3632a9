#include "crn/results_io.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace crn {

namespace {

constexpr const char* kHeader = "m,n,algorithm,metric,mean,stderr,trials";

struct MetricRow {
    const char* name;
    MetricStats CellStats::*field;
};

constexpr std::array<MetricRow, 5> kMetricRows{{
    {"sum_rate", &CellStats::sum_rate},
    {"min_rate", &CellStats::min_rate},
    {"num_matched", &CellStats::num_matched},
    {"proposal_count", &CellStats::proposal_count},
    {"rounds", &CellStats::rounds},
}};

Algorithm algorithm_from_name(const std::string& name) {
    for (Algorithm a :
         {Algorithm::proposed, Algorithm::deferred_acceptance, Algorithm::random})
        if (name == algorithm_name(a)) return a;
    throw std::runtime_error("unknown algorithm name '" + name + "'");
}

}  // namespace

std::string format_sig12(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

void write_results_csv(const SweepSummary& summary, std::ostream& out) {
    out << kHeader << '\n';
    for (const auto& cell : summary.cells) {
        for (const auto& row : kMetricRows) {
            const MetricStats& stats = cell.*(row.field);
            out << cell.m << ',' << cell.n << ',' << algorithm_name(cell.algorithm) << ','
                << row.name << ',' << format_sig12(stats.mean) << ','
                << format_sig12(stats.std_error) << ',' << cell.trials << '\n';
        }
    }
}

void write_results_json(const SweepSummary& summary, std::ostream& out) {
    out << "{\n  \"results\": [";
    bool first = true;
    for (const auto& cell : summary.cells) {
        for (const auto& row : kMetricRows) {
            const MetricStats& stats = cell.*(row.field);
            out << (first ? "\n" : ",\n");
            first = false;
            out << "    {\"m\": " << cell.m << ", \"n\": " << cell.n << ", \"algorithm\": \""
                << algorithm_name(cell.algorithm) << "\", \"metric\": \"" << row.name
                << "\", \"mean\": " << format_sig12(stats.mean) << ", \"stderr\": "
                << format_sig12(stats.std_error) << ", \"trials\": " << cell.trials << "}";
        }
    }
    out << "\n  ]\n}\n";
}

void write_results(const SweepSummary& summary, const std::string& path, OutputFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (format == OutputFormat::csv)
        write_results_csv(summary, out);
    else
        write_results_json(summary, out);
    out.flush();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

SweepSummary read_results_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::runtime_error("results CSV: missing or unexpected header");

    SweepSummary summary;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 7)
            throw std::runtime_error("results CSV line " + std::to_string(line_no) +
                                     ": expected 7 fields");

        const int m = std::stoi(fields[0]);
        const int n = std::stoi(fields[1]);
        const Algorithm algo = algorithm_from_name(fields[2]);
        CellStats* cell = nullptr;
        if (!summary.cells.empty()) {
            auto& back = summary.cells.back();
            if (back.m == m && back.n == n && back.algorithm == algo) cell = &back;
        }
        if (!cell) {
            summary.cells.push_back(CellStats{});
            cell = &summary.cells.back();
            cell->m = m;
            cell->n = n;
            cell->algorithm = algo;
        }
        cell->trials = std::stoll(fields[6]);

        MetricStats stats;
        stats.mean = std::strtod(fields[4].c_str(), nullptr);
        stats.std_error = std::strtod(fields[5].c_str(), nullptr);
        bool known = false;
        for (const auto& row : kMetricRows) {
            if (fields[3] == row.name) {
                cell->*(row.field) = stats;
                known = true;
                break;
            }
        }
        if (!known)
            throw std::runtime_error("results CSV line " + std::to_string(line_no) +
                                     ": unknown metric '" + fields[3] + "'");
    }
    return summary;
}

}  // namespace crn
