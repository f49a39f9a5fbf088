// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The linkopt Authors
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

#include "linkopt/csv.hpp"

#include "linkopt/units.hpp"

#include <cmath>
#include <cstdio>

namespace linkopt {

void CsvWriter::row(const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out_ << ',';
        out_ << quote(fields[i]);
    }
    out_ << '\n';
}

std::string CsvWriter::quote(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string CsvWriter::number(double value, int significant)
{
    if (!std::isfinite(value))
        return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, value);
    return buf;
}

std::string CsvWriter::number(std::optional<double> value, int significant)
{
    return value ? number(*value, significant) : std::string();
}

void write_sweep_header(CsvWriter& csv)
{
    csv.row({"distance_m", "pa_model", "modulation", "snr_db", "p_t_dbm", "p_pa_mw",
             "payload_bits", "retransmissions", "energy_j_per_bit", "binding", "feasible"});
}

void write_sweep_row(CsvWriter& csv, const OperatingPoint& p)
{
    if (!p.feasible) {
        csv.row({CsvWriter::number(p.distance), std::string(to_string(p.pa_variant)), "", "", "",
                 "", "", "", "", std::string(to_string(Binding::Infeasible)), "false"});
        return;
    }
    csv.row({CsvWriter::number(p.distance), std::string(to_string(p.pa_variant)), p.scheme.name,
             CsvWriter::number(linear_to_db(p.gamma_bar)), CsvWriter::number(watts_to_dbm(p.p_t)),
             CsvWriter::number(p.p_pa * 1e3), std::to_string(p.n_p), std::to_string(p.tau_r),
             CsvWriter::number(p.energy), std::string(to_string(p.binding)), "true"});
}

void write_lifetime_header(CsvWriter& csv)
{
    csv.row({"distance_m", "pa_model", "lifetime_s", "baseline_lifetime_s", "gain_percent"});
}

void write_lifetime_row(CsvWriter& csv, const LifetimeRow& row)
{
    csv.row({CsvWriter::number(row.distance), std::string(to_string(row.pa_variant)),
             CsvWriter::number(row.lifetime), CsvWriter::number(row.baseline_lifetime),
             CsvWriter::number(row.gain_percent)});
}

} // namespace linkopt
