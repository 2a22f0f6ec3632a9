#include "crn/config_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace crn {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, sep)) out.push_back(trim(token));
    return out;
}

long long to_int(const std::string& text) {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
    return v;
}

double to_double(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

bool to_bool(const std::string& text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
    if (text == "false" || text == "0" || text == "no" || text == "off") return false;
    throw std::invalid_argument("not a boolean: '" + text + "'");
}

std::vector<bool> parse_bool_list(const std::string& text) {
    std::vector<bool> out;
    for (const auto& token : split(text, ',')) out.push_back(to_bool(token));
    return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const auto& token : split(text, ',')) {
        const auto dots = token.find("..");
        if (dots != std::string::npos) {
            const int lo = static_cast<int>(to_int(token.substr(0, dots)));
            const int hi = static_cast<int>(to_int(token.substr(dots + 2)));
            if (hi < lo) throw std::invalid_argument("descending range: '" + token + "'");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(static_cast<int>(to_int(token)));
        }
    }
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& token : split(text, ',')) out.push_back(to_double(token));
    return out;
}

OutputFormat parse_output_format(const std::string& text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    throw std::invalid_argument("format must be 'csv' or 'json', got '" + text + "'");
}

ProposalOrder parse_proposal_order(const std::string& text) {
    if (text == "delta") return ProposalOrder::ascending_delta;
    if (text == "utility") return ProposalOrder::descending_utility;
    throw std::invalid_argument("proposal_order must be 'delta' or 'utility', got '" + text + "'");
}

void apply_config_entry(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "m_values") {
        cfg.m_values = parse_int_list(value);
    } else if (key == "n_values") {
        cfg.n_values = parse_int_list(value);
    } else if (key == "trials") {
        cfg.trials = to_int(value);
    } else if (key == "base_seed") {
        cfg.base_seed = static_cast<std::uint64_t>(to_int(value));
    } else if (key == "algorithms") {
        cfg.algorithms = AlgorithmSet::parse(value);
    } else if (key == "output") {
        cfg.output_path = value;
    } else if (key == "format") {
        cfg.format = parse_output_format(value);
    } else if (key == "verify_stability") {
        cfg.verify_stability = to_bool(value);
    } else if (key == "proposal_order") {
        cfg.proposal_order = parse_proposal_order(value);
    } else if (key == "area_side") {
        cfg.scenario.area_side = to_double(value);
    } else if (key == "su_tx_power_dbm") {
        cfg.scenario.su_tx_power_dbm = to_double(value);
    } else if (key == "pu_tx_power_dbm") {
        cfg.scenario.pu_tx_power_dbm = to_double(value);
    } else if (key == "noise_dbm") {
        cfg.scenario.noise_dbm = to_double(value);
    } else if (key == "path_loss_exponent") {
        cfg.scenario.path_loss_exponent = to_double(value);
    } else if (key == "path_loss_constant") {
        cfg.scenario.path_loss_constant = to_double(value);
    } else if (key == "link_radius") {
        cfg.scenario.link_radius = to_double(value);
    } else if (key == "beta_min") {
        cfg.scenario.beta_min = to_double(value);
    } else if (key == "beta_max") {
        cfg.scenario.beta_max = to_double(value);
    } else if (key == "alpha") {
        cfg.scenario.alpha_default = to_double(value);
    } else if (key == "priors") {
        cfg.scenario.prior_bands = parse_double_list(value);
    } else if (key == "truth_activity") {
        cfg.scenario.truth_activity = parse_bool_list(value);
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

namespace {

SweepConfig parse_key_value(std::istream& in) {
    SweepConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        try {
            apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::exception& e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

// JSON values are normalized to the comma-list text form so that both config
// formats share apply_config_entry.
std::string json_value_as_text(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_array()) {
        std::string out;
        for (const auto& item : v) {
            if (!out.empty()) out += ',';
            out += json_value_as_text(item);
        }
        return out;
    }
    return v.dump();
}

SweepConfig parse_json(std::istream& in) {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_object()) throw std::invalid_argument("JSON config must be an object");
    SweepConfig cfg;
    for (const auto& [key, value] : doc.items())
        apply_config_entry(cfg, key, json_value_as_text(value));
    return cfg;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    // Sniff the first non-space character to pick the format.
    std::istream::int_type c = in.peek();
    while (c != std::istream::traits_type::eof() &&
           std::isspace(static_cast<unsigned char>(c))) {
        in.get();
        c = in.peek();
    }
    if (c == '{') return parse_json(in);
    return parse_key_value(in);
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    try {
        return parse_sweep_config(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace crn
