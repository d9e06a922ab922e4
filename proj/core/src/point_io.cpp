#include "antipodes/point_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "antipodes/errors.hpp"

namespace antipodes {
namespace {

struct Table {
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::vector<double> values;
};

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& what) {
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                     what);
}

// Splits a line into (column, token) pairs; columns are 1-based.
std::vector<std::pair<std::size_t, std::string_view>> tokenize(std::string_view line) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            out.emplace_back(start + 1, line.substr(start, i - start));
        }
    }
    return out;
}

template <typename T>
T parse_number(std::string_view token, std::size_t line, std::size_t column, const char* what) {
    T value{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && token.front() == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        fail(line, column, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

Table read_table(std::istream& in) {
    Table t;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t rows_read = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().second.front() == '#') {
            continue;
        }
        if (!have_header) {
            if (tokens.size() != 2) {
                fail(line_no, tokens.front().first, "header must be 'd n'");
            }
            t.cols = parse_number<std::size_t>(tokens[0].second, line_no, tokens[0].first,
                                               "a dimension");
            t.rows = parse_number<std::size_t>(tokens[1].second, line_no, tokens[1].first,
                                               "a point count");
            if (t.cols == 0) {
                fail(line_no, tokens[0].first, "dimension must be at least 1");
            }
            if (t.rows == 0) {
                fail(line_no, tokens[1].first, "point count must be at least 1");
            }
            t.values.reserve(t.cols * t.rows);
            have_header = true;
            continue;
        }
        if (rows_read == t.rows) {
            fail(line_no, tokens.front().first, "more rows than declared in the header");
        }
        if (tokens.size() != t.cols) {
            const std::size_t col = tokens.size() > t.cols ? tokens[t.cols].first : line.size() + 1;
            fail(line_no, col,
                 "expected " + std::to_string(t.cols) + " values, found " +
                     std::to_string(tokens.size()));
        }
        for (const auto& [col, tok] : tokens) {
            t.values.push_back(parse_number<double>(tok, line_no, col, "a decimal number"));
        }
        ++rows_read;
    }
    if (!have_header) {
        fail(line_no + 1, 1, "missing 'd n' header");
    }
    if (rows_read != t.rows) {
        fail(line_no + 1, 1,
             "expected " + std::to_string(t.rows) + " rows, found " + std::to_string(rows_read));
    }
    return t;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

PointSet read_point_set(std::istream& in) {
    Table t = read_table(in);
    return PointSet(t.cols, std::move(t.values));
}

PointSet read_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open point file '" + path + "'");
    }
    return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& ps) {
    out << ps.dim() << ' ' << ps.size() << '\n';
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const auto p = ps[i];
        for (std::size_t k = 0; k < p.size(); ++k) {
            out << (k ? " " : "") << format_double(p[k]);
        }
        out << '\n';
    }
}

void write_point_set_file(const std::string& path, const PointSet& ps) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot write point file '" + path + "'");
    }
    write_point_set(out, ps);
}

FiniteMetric read_metric(std::istream& in) {
    Table t = read_table(in);
    if (t.cols != t.rows) {
        throw InputError("a distance table must be square");
    }
    return FiniteMetric(t.rows, std::move(t.values));
}

void write_metric(std::ostream& out, const FiniteMetric& m) {
    out << m.size() << ' ' << m.size() << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            out << (j ? " " : "") << format_double(m(i, j));
        }
        out << '\n';
    }
}

}  // namespace antipodes
