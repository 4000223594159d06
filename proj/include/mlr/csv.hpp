#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlr {

// Rectangular numeric table with '#'-prefixed metadata comments and a header
// row; values are rendered in 9-significant-digit scientific notation so
// emitted files diff and re-parse exactly.
struct CsvTable {
    std::vector<std::string> comments;  // without the leading '#'
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row) {
        if (!header.empty() && row.size() != header.size())
            throw std::invalid_argument("CsvTable: row width mismatch");
        rows.push_back(std::move(row));
    }

    static std::string format_value(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.8e", v);
        return buf;
    }

    void write(std::ostream& os) const {
        for (const auto& c : comments) os << "# " << c << "\n";
        for (std::size_t i = 0; i < header.size(); ++i)
            os << header[i] << (i + 1 < header.size() ? "," : "");
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << format_value(row[i]) << (i + 1 < row.size() ? "," : "");
            os << "\n";
        }
    }

    std::string to_string() const {
        std::ostringstream oss;
        write(oss);
        return oss.str();
    }

    // Atomic write: temp file in the same directory, then rename.
    void write_file(const std::string& path) const {
        const std::string tmp = path + ".tmp";
        {
            std::ofstream os(tmp);
            if (!os) throw std::runtime_error("cannot open " + tmp + " for writing");
            write(os);
            if (!os) throw std::runtime_error("write failed: " + tmp);
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw std::runtime_error("rename failed: " + path);
    }

    static CsvTable parse(std::istream& is) {
        CsvTable t;
        std::string line;
        bool header_seen = false;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (line[0] == '#') {
                t.comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
                continue;
            }
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) cells.push_back(cell);
            if (!header_seen) {
                t.header = cells;
                header_seen = true;
                continue;
            }
            std::vector<double> row;
            row.reserve(cells.size());
            for (const auto& c : cells) row.push_back(std::stod(c));
            t.add_row(std::move(row));
        }
        return t;
    }

    static CsvTable parse(const std::string& text) {
        std::istringstream iss(text);
        return parse(iss);
    }
};

}  // namespace mlr
