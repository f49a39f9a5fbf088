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

#pragma once

#include "linkopt/lifetime.hpp"
#include "linkopt/optimizer.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace linkopt {

/// Minimal RFC 4180 writer with LF line endings.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void row(const std::vector<std::string>& fields);

    static std::string quote(std::string_view field);
    static std::string number(double value, int significant = 10);
    static std::string number(std::optional<double> value, int significant = 10);

private:
    std::ostream& out_;
};

void write_sweep_header(CsvWriter& csv);
void write_sweep_row(CsvWriter& csv, const OperatingPoint& point);

void write_lifetime_header(CsvWriter& csv);
void write_lifetime_row(CsvWriter& csv, const LifetimeRow& row);

} // namespace linkopt
