#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "dplane/double.hpp"

namespace dplane::cli {

using ParamMap = std::map<std::string, std::string>;

struct KeySpec {
    std::string name;
    bool flag = false;  // boolean switch, stored as "true"
    std::string help;
};

struct RunConfig {
    std::string command;
    ParamMap parameters;
    std::string output_path;
    std::vector<Double> seed_list;
    std::vector<std::string> positional;

    bool has(const std::string& key) const { return parameters.count(key) != 0; }
    std::string get(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_flag(const std::string& key) const;
    std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;
};

const std::vector<std::string>& command_names();
// Throws ConfigError for an unknown command.
const std::vector<KeySpec>& accepted_keys(const std::string& command);
std::string accepted_key_list(const std::string& command);

// Plain key=value lines; '#' starts a comment. Throws ConfigError.
ParamMap parse_config(std::istream& in, const std::string& origin);
ParamMap read_config_file(const std::string& path);

// Merges file values with flags (flags win), rejects unknown keys with the
// accepted list, and parses seeds and the output path.
RunConfig make_config(const std::string& command, const ParamMap& file_params, const ParamMap& flag_params,
                      const std::vector<std::string>& positional = {});

// "t,x;t,x;..." Throws ConfigError.
std::vector<Double> parse_seeds(const std::string& text);
std::vector<double> parse_list(const std::string& text);
double parse_number(const std::string& text, const std::string& key);

}  // namespace dplane::cli
