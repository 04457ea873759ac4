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

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cisac/errors.hpp"
#include "cisac/harness/csv.hpp"

namespace cisac::harness {

struct PlotLayout {
    std::string x;
    std::string series;  ///< empty: single series
    std::string y = "value";
};

namespace detail {

inline constexpr const char* kMcMethod = "monte-carlo";

/// Column lookup over keys, the fixed numeric columns and extras.
inline std::optional<double> cell(const ResultTable& t, const ResultRow& r, const std::string& name) {
    for (std::size_t i = 0; i < t.key_names.size(); ++i)
        if (t.key_names[i] == name) return r.keys[i];
    if (name == "value") return r.value;
    if (name == "uncertainty") return r.uncertainty;
    if (name == "quad_error") return r.quad_error;
    for (std::size_t i = 0; i < t.extra_names.size(); ++i)
        if (t.extra_names[i] == name) return r.extras[i];
    return std::nullopt;
}

inline bool has_column(const ResultTable& t, const std::string& name) {
    for (const auto& c : t.columns())
        if (c == name) return true;
    return false;
}

}  // namespace detail

/// Long format: x, [series], method, y, ci and, when the table pairs
/// analytic with Monte Carlo rows, residual = analytic - mc (empty on the
/// Monte Carlo rows themselves). Rows keep table order.
inline void emit_plotdata(const ResultTable& t, const PlotLayout& layout, std::ostream& out) {
    for (const auto* name : {&layout.x, &layout.y})
        if (!detail::has_column(t, *name)) throw UsageError("plotdata", "unknown column '" + *name + "'");
    if (!layout.series.empty() && !detail::has_column(t, layout.series))
        throw UsageError("plotdata", "unknown column '" + layout.series + "'");

    bool any_mc = false;
    bool any_analytic = false;
    for (const auto& r : t.rows) (r.method == detail::kMcMethod ? any_mc : any_analytic) = true;
    const bool paired = any_mc && any_analytic;

    out << layout.x << ',';
    if (!layout.series.empty()) out << layout.series << ',';
    out << "method," << layout.y << ",ci";
    if (paired) out << ",residual";
    out << '\n';

    for (const auto& r : t.rows) {
        out << format_number(*detail::cell(t, r, layout.x)) << ',';
        if (!layout.series.empty()) out << format_number(*detail::cell(t, r, layout.series)) << ',';
        const double y = *detail::cell(t, r, layout.y);
        out << r.method << ',' << format_number(y) << ',' << format_number(r.uncertainty);
        if (paired) {
            out << ',';
            if (r.method != detail::kMcMethod) {
                for (const auto& m : t.rows)
                    if (m.method == detail::kMcMethod && m.keys == r.keys) {
                        out << format_number(y - *detail::cell(t, m, layout.y));
                        break;
                    }
            }
        }
        out << '\n';
    }
}

inline void emit_plotdata_file(const ResultTable& t, const PlotLayout& layout, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UsageError("plotdata", "cannot write '" + path + "'");
    emit_plotdata(t, layout, out);
}

}  // namespace cisac::harness
