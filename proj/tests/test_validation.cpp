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

#include "linkopt/commands.hpp"
#include "linkopt/csv.hpp"
#include "linkopt/validation.hpp"

#include <doctest.h>

#include <sstream>

using namespace linkopt;

namespace {

ScenarioConfig short_sweep()
{
    ScenarioConfig c = default_config();
    c.sweep.distance_min = 1.0;
    c.sweep.distance_max = 60.0;
    c.sweep.distance_step = 7.0;
    return c;
}

} // namespace

TEST_CASE("csv quoting and number formatting")
{
    CHECK(CsvWriter::quote("plain") == "plain");
    CHECK(CsvWriter::quote("a,b") == "\"a,b\"");
    CHECK(CsvWriter::quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(CsvWriter::number(0.1) == "0.1");
    CHECK(CsvWriter::number(std::optional<double>{}) == "");
    std::ostringstream out;
    CsvWriter csv(out);
    csv.row({"x", "y\nz"});
    CHECK(out.str() == "x,\"y\nz\"\n");
}

TEST_CASE("default configuration passes every check")
{
    ValidationOptions opt;
    opt.instances = 60;
    const auto report = run_validation(default_config(), opt);
    for (const auto& c : report.checks) {
        INFO(c.name << " residual=" << c.residual << " " << c.detail);
        CHECK(c.passed);
    }
    CHECK(report.checks.size() == 12);
}

TEST_CASE("a perturbed closed form is caught")
{
    ValidationOptions opt;
    opt.instances = 20;
    opt.snr_perturbation = 0.1;
    const auto r = check_snr_optimum_quadratic(default_config(), opt);
    CHECK_FALSE(r.passed);
    CHECK(r.residual > 0.05);
}

TEST_CASE("relative error curves cover three packet sizes")
{
    const std::array<Bits, 3> sizes{120, 1024, 10048};
    const auto pts = relative_error_curve(make_square_qam(16), sizes, 10.0, 40.0);
    CHECK(pts.size() == 93);
    for (const auto& p : pts) {
        CHECK(p.per_exact > 0.0);
        // The closed form is an upper bound up to the fit error.
        CHECK(p.per_bound >= p.per_exact * (1.0 - 1e-6));
    }
    std::ostringstream out;
    write_relative_error_csv(out, pts);
    CHECK(out.str().rfind("n_bits,snr_db,per_exact,per_approx,per_bound,re_approx_percent,re_bound_percent\n", 0) == 0);
}

TEST_CASE("sweep output is deterministic and complete")
{
    const ScenarioConfig c = short_sweep();
    const std::vector<PaVariant> all{PaVariant::CPA, PaVariant::TPA, PaVariant::ETPA};
    std::ostringstream a;
    std::ostringstream b;
    CHECK(cmd_sweep(c, all, a) == kExitOk);
    CHECK(cmd_sweep(c, all, b) == kExitOk);
    CHECK(a.str() == b.str());
    std::size_t lines = 0;
    for (char ch : a.str())
        lines += ch == '\n';
    CHECK(lines == 1 + c.sweep.distances().size() * all.size());
    CHECK(a.str().rfind("distance_m,pa_model,modulation,snr_db,p_t_dbm,p_pa_mw,payload_bits,"
                        "retransmissions,energy_j_per_bit,binding,feasible\n",
                        0) == 0);
    CHECK(a.str().find("\r") == std::string::npos);
}

TEST_CASE("lifetime output")
{
    const ScenarioConfig c = short_sweep();
    std::ostringstream out;
    CHECK(cmd_lifetime(c, {PaVariant::CPA}, out) == kExitOk);
    CHECK(out.str().rfind("distance_m,pa_model,lifetime_s,baseline_lifetime_s,gain_percent\n", 0) == 0);
    CHECK(out.str().find("\n1,cpa,") != std::string::npos);
}

TEST_CASE("optimize exit codes")
{
    ScenarioConfig c = default_config();
    std::ostringstream out;
    CHECK(cmd_optimize(c, 10.0, PaVariant::CPA, out) == kExitOk);
    CHECK(out.str().find("feasible: true") != std::string::npos);
    c.modulations = {builtin_modulation("4QAM")};
    std::ostringstream far;
    CHECK(cmd_optimize(c, 70.0, PaVariant::CPA, far) == kExitInfeasible);
    CHECK(far.str().find("rejected: 4QAM tau=1") != std::string::npos);
}
