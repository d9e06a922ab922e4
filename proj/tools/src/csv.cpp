#include "antipodes/csv.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "antipodes/errors.hpp"
#include "antipodes/point_io.hpp"

namespace antipodes {
namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

template <typename T>
T parse_field(const std::string& s, std::size_t line, const char* column) {
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw InputError("line " + std::to_string(line) + ": bad " + column + " value '" + s + "'");
    }
    return value;
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    const bool bounds = std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.bounds.has_value(); });
    out << "epsilon,n,neighbors,antipodes,ratio";
    if (bounds) {
        out << ",k,quad_form,norm_sq,lambda1,trace_mtm,chain_ok";
    }
    out << '\n';
    for (const auto& r : rows) {
        out << format_double(r.epsilon) << ',' << r.n << ',' << r.neighbors << ',' << r.antipodes << ',';
        if (r.ratio) {
            out << format_double(*r.ratio);
        }
        if (bounds) {
            if (r.bounds) {
                const auto& b = *r.bounds;
                out << ',' << b.k << ',' << b.quad_form << ',' << b.norm_sq << ','
                    << format_double(b.lambda1) << ',' << b.trace_mtm << ','
                    << (b.chain_ok ? "true" : "false");
            } else {
                out << ",,,,,,";
            }
        }
        out << '\n';
    }
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<SweepRow> rows;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto fields = split(line);
        if (!header) {
            if (fields.size() < 5 || fields[0] != "epsilon" || fields[1] != "n" ||
                fields[2] != "neighbors" || fields[3] != "antipodes" || fields[4] != "ratio") {
                throw InputError("line " + std::to_string(line_no) +
                                 ": header must start with epsilon,n,neighbors,antipodes,ratio");
            }
            header = true;
            continue;
        }
        if (fields.size() < 5) {
            throw InputError("line " + std::to_string(line_no) + ": expected at least 5 fields");
        }
        SweepRow row;
        row.epsilon = parse_field<double>(fields[0], line_no, "epsilon");
        row.n = parse_field<std::size_t>(fields[1], line_no, "n");
        row.neighbors = parse_field<std::uint64_t>(fields[2], line_no, "neighbors");
        row.antipodes = parse_field<std::uint64_t>(fields[3], line_no, "antipodes");
        if (!fields[4].empty()) {
            row.ratio = parse_field<double>(fields[4], line_no, "ratio");
        }
        rows.push_back(row);
    }
    if (!header) {
        throw InputError("empty sweep table");
    }
    return rows;
}

}  // namespace antipodes
