#include "cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dplane/errors.hpp"

namespace dplane::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(trim(item));
    return out;
}

const std::map<std::string, std::vector<KeySpec>>& key_table() {
    static const std::map<std::string, std::vector<KeySpec>> table{
        {"trace",
         {{"potential", false, "source | vortex | vortex-source | multipole | cylinder"},
          {"q", false, "source charge"},
          {"m", false, "vortex strength"},
          {"n", false, "multipole order"},
          {"qe", false, "multipole charge, real part"},
          {"qm", false, "multipole charge, j part"},
          {"e0", false, "cylinder field"},
          {"R", false, "cylinder radius"},
          {"seeds", false, "t,x;t,x;..."},
          {"ds", false, "step length"},
          {"steps", false, "number of steps (overrides max-len)"},
          {"max-len", false, "maximum arc length"},
          {"dual", true, "trace dual lines"},
          {"bbox", false, "tmin,tmax,xmin,xmax"},
          {"drift-tol", false, "relative first-integral drift tolerated per line"},
          {"svg", false, "SVG output path"},
          {"output", false, "CSV output path (- for stdout)"}}},
        {"integrate",
         {{"alpha", false, "integer exponent"},
          {"rho", false, "hyperbolic radius"},
          {"cutoff", false, "rapidity cutoff Psi"},
          {"arcs", false, "number of quadrant arcs, 1..4"},
          {"center", false, "t,x"},
          {"pinch", false, "gap half-length relative to rho"},
          {"mode", false, "arc | loop"},
          {"output", false, "output path (- for stdout)"}}},
        {"verify",
         {{"suite", false, "cr | wave | poly | srt | dual"},
          {"samples", false, "random points per check"},
          {"seed", false, "random seed"},
          {"output", false, "output path (- for stdout)"}}},
        {"poly",
         {{"op", false, "mul | div | add | sub | norm | angles | exp | conj | nproduct | jbasis"},
          {"a", false, "A1,A2,A3"},
          {"b", false, "B1,B2,B3"},
          {"c", false, "C1,C2,C3"},
          {"output", false, "output path (- for stdout)"}}},
        {"srt-sim",
         {{"mode", false, "force | lorentz"},
          {"mass", false, "particle mass"},
          {"f", false, "rest-frame force"},
          {"q", false, "charge"},
          {"field", false, "uniform field value"},
          {"v0", false, "initial velocity"},
          {"ds", false, "proper-time step"},
          {"steps", false, "number of steps"},
          {"every", false, "write every k-th state"},
          {"output", false, "CSV output path (- for stdout)"}}},
        {"render",
         {{"map", false, "square | cube | inverse | exp | zhukowskij"},
          {"quadrant", false, "I | II | III | IV"},
          {"rho-range", false, "rho_min,rho_max"},
          {"psi-range", false, "psi_min,psi_max"},
          {"lines", false, "net lines per family"},
          {"wave", true, "render wave time slices instead of a net"},
          {"R", false, "wave boundary radius"},
          {"phi0", false, "wave boundary value"},
          {"slices", false, "t values"},
          {"csv", false, "CSV output path for the wave slices"},
          {"output", false, "SVG output path (- for stdout)"}}},
    };
    return table;
}

}  // namespace

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
    auto it = parameters.find(key);
    return it == parameters.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
    auto it = parameters.find(key);
    return it == parameters.end() ? fallback : parse_number(it->second, key);
}

int RunConfig::get_int(const std::string& key, int fallback) const {
    auto it = parameters.find(key);
    if (it == parameters.end()) return fallback;
    double v = parse_number(it->second, key);
    if (v != std::floor(v) || std::fabs(v) > 1e9) throw ConfigError("--" + key + " expects an integer");
    return static_cast<int>(v);
}

bool RunConfig::get_flag(const std::string& key) const {
    auto it = parameters.find(key);
    if (it == parameters.end()) return false;
    if (it->second == "true" || it->second == "1" || it->second == "yes") return true;
    if (it->second == "false" || it->second == "0" || it->second == "no") return false;
    throw ConfigError("--" + key + " expects true or false");
}

std::vector<double> RunConfig::get_list(const std::string& key, const std::vector<double>& fallback) const {
    auto it = parameters.find(key);
    return it == parameters.end() ? fallback : parse_list(it->second);
}

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names{"trace", "integrate", "verify", "poly", "srt-sim", "render"};
    return names;
}

const std::vector<KeySpec>& accepted_keys(const std::string& command) {
    auto it = key_table().find(command);
    if (it == key_table().end()) throw ConfigError("unknown command '" + command + "'");
    return it->second;
}

std::string accepted_key_list(const std::string& command) {
    std::string out;
    for (const auto& k : accepted_keys(command)) out += (out.empty() ? "" : ", ") + k.name;
    return out;
}

double parse_number(const std::string& text, const std::string& key) {
    std::string s = trim(text);
    double v = 0.0;
    const char* first = s.data();
    if (!s.empty() && s[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("--" + key + ": '" + text + "' is not a number");
    return v;
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_number(item, "list"));
    return out;
}

std::vector<Double> parse_seeds(const std::string& text) {
    std::vector<Double> out;
    for (const auto& item : split(text, ';')) {
        if (item.empty()) continue;
        auto xy = parse_list(item);
        if (xy.size() != 2) throw ConfigError("seed '" + item + "' must be t,x");
        out.push_back({xy[0], xy[1]});
    }
    return out;
}

ParamMap parse_config(std::istream& in, const std::string& origin) {
    ParamMap out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        out[key] = trim(line.substr(eq + 1));
    }
    return out;
}

ParamMap read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

RunConfig make_config(const std::string& command, const ParamMap& file_params, const ParamMap& flag_params,
                      const std::vector<std::string>& positional) {
    const auto& keys = accepted_keys(command);
    RunConfig cfg;
    cfg.command = command;
    cfg.positional = positional;
    cfg.parameters = file_params;
    for (const auto& [k, v] : flag_params) cfg.parameters[k] = v;
    for (const auto& [k, v] : cfg.parameters) {
        bool known = std::any_of(keys.begin(), keys.end(), [&](const KeySpec& s) { return s.name == k; });
        if (!known)
            throw ConfigError("unknown key '" + k + "' for " + command + "; accepted keys: " +
                              accepted_key_list(command));
    }
    cfg.output_path = cfg.get("output", "-");
    if (cfg.has("seeds")) cfg.seed_list = parse_seeds(cfg.get("seeds", ""));
    return cfg;
}

}  // namespace dplane::cli
