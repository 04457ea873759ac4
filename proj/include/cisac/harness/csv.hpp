// SPDX-License-Identifier: Apache-2.0
//
// cisac: performance evaluation of cooperative ISAC networks
// Copyright (C) 2026 The cisac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cisac/errors.hpp"

namespace cisac::harness {

/// One (sweep point x method) result. Keys hold the swept values in the
/// table's key order; extras hold metric-specific columns.
struct ResultRow {
    std::vector<double> keys;
    std::string metric;
    std::string method;
    double value = 0.0;
    double uncertainty = 0.0;  ///< CI half-width, 0 for analytic rows
    double quad_error = 0.0;   ///< quadrature error bound, 0 for MC rows
    std::vector<double> extras;
    double wall_ms = 0.0;  ///< not written to the CSV; see write_metadata()

    friend bool operator==(const ResultRow& a, const ResultRow& b) {
        return a.keys == b.keys && a.metric == b.metric && a.method == b.method && a.value == b.value &&
               a.uncertainty == b.uncertainty && a.quad_error == b.quad_error && a.extras == b.extras;
    }
};

struct ResultTable {
    std::vector<std::string> key_names;
    std::vector<std::string> extra_names;
    std::vector<ResultRow> rows;

    std::vector<std::string> columns() const {
        std::vector<std::string> c = key_names;
        for (const char* f : {"metric", "method", "value", "uncertainty", "quad_error"}) c.emplace_back(f);
        c.insert(c.end(), extra_names.begin(), extra_names.end());
        return c;
    }
};

/// Shortest round-tripping decimal form; never locale dependent.
inline std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

inline double parse_number(const std::string& s) {
    if (s == "nan") return std::nan("");
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw UsageError("csv", "not a number: '" + s + "'");
    return v;
}

inline void write_csv(const ResultTable& t, std::ostream& out) {
    const auto cols = t.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& r : t.rows) {
        for (double k : r.keys) out << format_number(k) << ',';
        out << r.metric << ',' << r.method << ',' << format_number(r.value) << ',' << format_number(r.uncertainty)
            << ',' << format_number(r.quad_error);
        for (double e : r.extras) out << ',' << format_number(e);
        out << '\n';
    }
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

/// Inverse of write_csv(). Key columns are those before "metric", extras
/// those after "quad_error".
inline ResultTable read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw UsageError("csv", "missing header");
    const auto header = split_csv_line(line);
    std::size_t metric_at = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == "metric") metric_at = i;
    if (metric_at + 5 > header.size() || header[metric_at + 4] != "quad_error")
        throw UsageError("csv", "header lacks metric, method, value, uncertainty, quad_error");
    ResultTable t;
    t.key_names.assign(header.begin(), header.begin() + static_cast<std::ptrdiff_t>(metric_at));
    t.extra_names.assign(header.begin() + static_cast<std::ptrdiff_t>(metric_at + 5), header.end());
    int number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw UsageError("csv", "line " + std::to_string(number) + ": expected " + std::to_string(header.size()) +
                                        " cells");
        ResultRow r;
        for (std::size_t i = 0; i < metric_at; ++i) r.keys.push_back(parse_number(cells[i]));
        r.metric = cells[metric_at];
        r.method = cells[metric_at + 1];
        r.value = parse_number(cells[metric_at + 2]);
        r.uncertainty = parse_number(cells[metric_at + 3]);
        r.quad_error = parse_number(cells[metric_at + 4]);
        for (std::size_t i = metric_at + 5; i < cells.size(); ++i) r.extras.push_back(parse_number(cells[i]));
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline void write_csv_file(const ResultTable& t, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("csv", "cannot write '" + path + "'");
    write_csv(t, out);
}

/// Timestamps and wall-clock times, kept out of the CSV so that reruns with
/// the same seed produce byte-identical result files.
inline void write_metadata(const ResultTable& t, const std::string& path,
                           const std::vector<std::pair<std::string, std::string>>& fields) {
    std::ofstream out(path);
    if (!out) throw UsageError("csv", "cannot write '" + path + "'");
    for (const auto& [k, v] : fields) out << k << '=' << v << '\n';
    double total = 0.0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out << "row" << i << "_wall_ms=" << format_number(t.rows[i].wall_ms) << '\n';
        total += t.rows[i].wall_ms;
    }
    out << "total_wall_ms=" << format_number(total) << '\n';
}

}  // namespace cisac::harness
