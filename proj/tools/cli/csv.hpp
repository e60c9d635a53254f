#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dplane/fields.hpp"

namespace dplane::cli {

inline constexpr const char* csv_header = "line_id,s,t,x,invariant";

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

void write_field_lines(std::ostream& out, const std::vector<FieldLine>& lines);

struct CsvRow {
    int line_id = 0;
    double s = 0.0;
    double t = 0.0;
    double x = 0.0;
    double invariant = 0.0;
};

// Throws ConfigError on a missing header or a malformed row.
std::vector<CsvRow> read_rows(std::istream& in);
// Groups rows by line_id in order of first appearance; seeds are the first points.
std::vector<FieldLine> read_field_lines(std::istream& in);

}  // namespace dplane::cli
