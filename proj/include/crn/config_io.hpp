#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crn/harness.hpp"

namespace crn {

// Loads a sweep configuration from either format. A file whose first
// non-space character is '{' is parsed as JSON; anything else as flat
// "key = value" lines ('#' starts a comment). Every key is optional, so an
// empty file yields the built-in defaults.
SweepConfig load_sweep_config(const std::string& path);

SweepConfig parse_sweep_config(std::istream& in);

// Shared key handling, also used by the CLI for overrides. Throws
// std::invalid_argument on an unknown key or a malformed value. List-valued
// keys take comma-separated entries; integer lists also accept "lo..hi".
void apply_config_entry(SweepConfig& cfg, const std::string& key, const std::string& value);

std::vector<int> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);
OutputFormat parse_output_format(const std::string& text);
ProposalOrder parse_proposal_order(const std::string& text);

}  // namespace crn
