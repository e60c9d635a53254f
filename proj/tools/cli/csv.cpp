#include "cli/csv.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "cli/config.hpp"
#include "dplane/errors.hpp"

namespace dplane::cli {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw Error("number formatting failed");
    return std::string(buf, ptr);
}

void write_field_lines(std::ostream& out, const std::vector<FieldLine>& lines) {
    out << csv_header << '\n';
    for (std::size_t id = 0; id < lines.size(); ++id) {
        const auto& L = lines[id];
        for (std::size_t k = 0; k < L.points.size(); ++k) {
            out << id << ',' << format_double(L.arc[k]) << ',' << format_double(L.points[k].t) << ','
                << format_double(L.points[k].x) << ',' << format_double(L.invariant[k]) << '\n';
        }
    }
}

std::vector<CsvRow> read_rows(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != csv_header) throw ConfigError("CSV header must be " + std::string(csv_header));
    std::vector<CsvRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string cell;
        std::vector<double> v;
        while (std::getline(fields, cell, ',')) v.push_back(parse_number(cell, "csv"));
        if (v.size() != 5) throw ConfigError("CSV row " + std::to_string(lineno) + " needs 5 fields");
        rows.push_back({static_cast<int>(v[0]), v[1], v[2], v[3], v[4]});
    }
    return rows;
}

std::vector<FieldLine> read_field_lines(std::istream& in) {
    std::vector<FieldLine> out;
    std::map<int, std::size_t> index;
    for (const auto& r : read_rows(in)) {
        auto [it, fresh] = index.try_emplace(r.line_id, out.size());
        if (fresh) {
            out.emplace_back();
            out.back().seed = {r.t, r.x};
        }
        auto& L = out[it->second];
        L.points.push_back({r.t, r.x});
        L.arc.push_back(r.s);
        L.invariant.push_back(r.invariant);
    }
    return out;
}

}  // namespace dplane::cli
