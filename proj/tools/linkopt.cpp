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
#include "linkopt/error.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace linkopt;

namespace {

struct Common {
    std::string config;
    std::string out;
    std::string pa;
};

std::vector<PaVariant> pa_list(const ScenarioConfig& config, const std::string& pa)
{
    if (pa.empty())
        return config.sweep.pa_models;
    return {parse_pa_variant(pa)};
}

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--config", c.config, "Scenario config (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--pa", c.pa, "PA model")->check(CLI::IsMember({"cpa", "tpa", "etpa"}, CLI::ignore_case));
    sub->add_option("--out", c.out, "Output file (default stdout)");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Energy-optimal link adaptation"};
    app.require_subcommand(1);

    Common common;
    double distance = 0.0;
    std::string curves_path;
    double perturb = 0.0;
    int instances = 200;

    auto* optimize = app.add_subcommand("optimize", "Optimise one link");
    add_common(optimize, common);
    auto* distance_opt =
        optimize->add_option("--distance", distance, "Distance in metres")->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "Optimal operating point over the distance grid");
    add_common(sweep, common);

    auto* lifetime = app.add_subcommand("lifetime", "Lifetime gain over the baseline scheme");
    add_common(lifetime, common);

    auto* validate = app.add_subcommand("validate", "Run oracle and invariant checks");
    add_common(validate, common);
    validate->add_option("--curves", curves_path, "Write 16QAM relative-error curves (CSV)");
    validate->add_option("--perturb-snr", perturb, "Relative error injected into the SNR closed form");
    validate->add_option("--instances", instances, "Randomised instances per check")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const ScenarioConfig config = load_config(common.config);

        std::unique_ptr<std::ofstream> file;
        if (!common.out.empty()) {
            file = std::make_unique<std::ofstream>(common.out, std::ios::binary);
            if (!*file) {
                std::cerr << "error: cannot write " << common.out << "\n";
                return kExitUsage;
            }
        }
        std::ostream& out = file ? *file : std::cout;

        if (*optimize) {
            std::optional<double> d;
            if (*distance_opt)
                d = distance;
            std::optional<PaVariant> pa;
            if (!common.pa.empty())
                pa = parse_pa_variant(common.pa);
            return cmd_optimize(config, d, pa, out);
        }
        if (*sweep)
            return cmd_sweep(config, pa_list(config, common.pa), out);
        if (*lifetime)
            return cmd_lifetime(config, pa_list(config, common.pa), out);

        ValidationOptions options;
        options.snr_perturbation = perturb;
        options.instances = instances;
        std::unique_ptr<std::ofstream> curves;
        if (!curves_path.empty()) {
            curves = std::make_unique<std::ofstream>(curves_path, std::ios::binary);
            if (!*curves) {
                std::cerr << "error: cannot write " << curves_path << "\n";
                return kExitUsage;
            }
        }
        return cmd_validate(config, options, out, curves.get());
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
