#include "aoicr/configfile.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace aoicr {
namespace {

using Field = double SystemConfig::*;

const std::unordered_map<std::string, Field>& field_table() {
    static const std::unordered_map<std::string, Field> table = {
        {"p_p_dbm", &SystemConfig::p_p_dbm},
        {"p_s_dbm", &SystemConfig::p_s_dbm},
        {"n0_dbm", &SystemConfig::n0_dbm},
        {"ic_over_n0", &SystemConfig::ic_over_n0},
        {"r_p", &SystemConfig::r_p},
        {"r_s", &SystemConfig::r_s},
        {"d_pp", &SystemConfig::d_pp},
        {"d_ss", &SystemConfig::d_ss},
        {"d_sp", &SystemConfig::d_sp},
        {"d_ps", &SystemConfig::d_ps},
        {"omega", &SystemConfig::omega},
        {"p", &SystemConfig::p},
        {"q", &SystemConfig::q},
    };
    return table;
}

Field lookup(const std::string& key) {
    auto it = field_table().find(key);
    if (it == field_table().end())
        throw std::invalid_argument("unknown parameter '" + key + "'");
    return it->second;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

void set_config_field(SystemConfig& cfg, const std::string& key, double value) {
    cfg.*lookup(key) = value;
}

double get_config_field(const SystemConfig& cfg, const std::string& key) {
    return cfg.*lookup(key);
}

SystemConfig parse_config(std::istream& in, const std::string& origin) {
    SystemConfig cfg;
    std::string line;
    int lineno = 0;
    const auto fail = [&](const std::string& msg) {
        throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                    ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string val = trim(body.substr(eq + 1));
        if (key.empty() || val.empty()) fail("expected 'key = value'");
        char* end = nullptr;
        const double x = std::strtod(val.c_str(), &end);
        if (end == val.c_str() || *end != '\0')
            fail("'" + val + "' is not a number");
        try {
            set_config_field(cfg, key, x);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    return cfg;
}

SystemConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

} // namespace aoicr
