#include "clsc/triangle.hpp"

#include "clsc/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace clsc {

Triangle::Triangle(std::vector<std::vector<double>> rows) : rows_(std::move(rows)) {
    const std::size_t n = rows_.size();
    if (n < 3) throw IoError("triangle: n < 3 (need at least 3 accident years)");
    for (std::size_t i = 1; i <= n; ++i) {
        if (rows_[i - 1].size() != n + 1 - i)
            throw IoError("triangle: row " + std::to_string(i) + " has " +
                          std::to_string(rows_[i - 1].size()) + " values, expected " +
                          std::to_string(n + 1 - i));
        for (double v : rows_[i - 1])
            if (!std::isfinite(v))
                throw IoError("triangle: non-finite amount in row " + std::to_string(i));
    }
}

namespace {

std::vector<double> parse_row(const std::string& line, std::size_t lineno) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        std::size_t b = pos, e = comma;
        while (b < e && (line[b] == ' ' || line[b] == '\t')) ++b;
        while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t' || line[e - 1] == '\r')) --e;
        if (b == e)
            throw IoError("triangle: empty field on line " + std::to_string(lineno));
        double v = 0.0;
        const auto res = std::from_chars(line.data() + b, line.data() + e, v);
        if (res.ec != std::errc{} || res.ptr != line.data() + e)
            throw IoError("triangle: cannot parse '" + line.substr(b, e - b) +
                          "' on line " + std::to_string(lineno));
        out.push_back(v);
        if (comma == line.size()) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

Triangle parse_triangle(const std::string& text, TriangleKind kind) {
    std::vector<std::vector<double>> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        rows.push_back(parse_row(line, lineno));
    }
    if (rows.empty()) throw IoError("triangle: no data rows");
    if (kind == TriangleKind::incremental) {
        for (auto& row : rows)
            for (std::size_t j = 1; j < row.size(); ++j) row[j] += row[j - 1];
    }
    return Triangle(std::move(rows));
}

Triangle load_triangle(const std::filesystem::path& path, TriangleKind kind) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open triangle file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_triangle(buf.str(), kind);
}

void save_triangle(const Triangle& t, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write triangle file: " + path.string());
    char num[64];
    for (const auto& row : t.rows()) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::snprintf(num, sizeof num, "%.17g", row[j]);
            if (j) out << ',';
            out << num;
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed: " + path.string());
}

Triangle to_incremental(const Triangle& cumulative) {
    auto rows = cumulative.rows();
    for (auto& row : rows)
        for (std::size_t j = row.size(); j-- > 1;) row[j] -= row[j - 1];
    return Triangle(std::move(rows));
}

Triangle cumulate(const Triangle& incremental) {
    auto rows = incremental.rows();
    for (auto& row : rows)
        for (std::size_t j = 1; j < row.size(); ++j) row[j] += row[j - 1];
    return Triangle(std::move(rows));
}

std::vector<std::pair<std::size_t, double>> latest_diagonal(const Triangle& t) {
    std::vector<std::pair<std::size_t, double>> d;
    d.reserve(t.n());
    for (std::size_t i = 1; i <= t.n(); ++i) d.emplace_back(i, t.at(i, t.n() + 1 - i));
    return d;
}

} // namespace clsc
