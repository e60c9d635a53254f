#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dplane::cli {

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool at_least = false;  // controls must reach the tolerance instead of staying below it

    bool pass() const { return at_least ? value >= tolerance : value <= tolerance; }
};

const std::vector<std::string>& suite_names();

// Throws ConfigError for an unknown suite.
std::vector<Check> run_suite(const std::string& suite, int samples = 100, unsigned long seed = 1);

// One line per check; returns true when all pass.
bool print_checks(std::ostream& out, const std::vector<Check>& checks);

}  // namespace dplane::cli
