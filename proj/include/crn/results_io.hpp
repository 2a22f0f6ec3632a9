#pragma once

#include <iosfwd>
#include <string>

#include "crn/harness.hpp"

namespace crn {

// 12 significant digits, shortest form ("%.12g"). Serialization is canonical:
// writing a parsed value reproduces its original text.
std::string format_sig12(double value);

// Header is exactly "m,n,algorithm,metric,mean,stderr,trials"; one row per
// (cell, metric) in sweep order, metrics ordered sum_rate, min_rate,
// num_matched, proposal_count, rounds.
void write_results_csv(const SweepSummary& summary, std::ostream& out);

// Same rows as objects under a top-level "results" array, with numbers
// formatted identically to the CSV.
void write_results_json(const SweepSummary& summary, std::ostream& out);

void write_results(const SweepSummary& summary, const std::string& path, OutputFormat format);

// Parses write_results_csv output back into a summary. Throws
// std::runtime_error on a malformed header or row.
SweepSummary read_results_csv(std::istream& in);

}  // namespace crn
