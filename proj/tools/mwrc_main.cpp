/*
Copyright 2026 The mwrc Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
// Command line front end: `mwrc capacity|simulate|sweep`.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mwrc/capacity.hpp"
#include "mwrc/channel.hpp"
#include "mwrc/fdf.hpp"
#include "mwrc/harness.hpp"

namespace {

// Shared channel flags. --config is a JSON file {"L": 3, "rho": [...]}
// and excludes the individual flags.
struct ChannelArgs {
    unsigned users = 0;
    std::string rho_list;
    std::string config_path;

    void attach(CLI::App& cmd) {
        auto* users_opt = cmd.add_option("-L,--users", users, "Number of users (L >= 2)");
        auto* rho_opt = cmd.add_option(
            "--rho", rho_list,
            "Comma list of L+1 crossover probabilities, uplink first");
        auto* cfg_opt =
            cmd.add_option("--config", config_path, "JSON channel config file")
                ->check(CLI::ExistingFile);
        cfg_opt->excludes(users_opt)->excludes(rho_opt);
        users_opt->needs(rho_opt);
        rho_opt->needs(users_opt);
    }

    mwrc::ChannelParams resolve() const {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            std::stringstream buf;
            buf << in.rdbuf();
            return mwrc::ChannelParams::from_json(buf.str());
        }
        if (users == 0 && rho_list.empty())
            throw std::invalid_argument("channel not specified: pass --users/--rho or --config");
        mwrc::ChannelParams params;
        params.users = users;
        std::stringstream ss(rho_list);
        std::string item;
        while (std::getline(ss, item, ','))
            params.rho.push_back(std::stod(item));
        params.validate();
        return params;
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"Binary multi-way relay channel simulator (functional decode-forward)"};
    app.require_subcommand(1);

    // ---- capacity ----
    auto* cap_cmd = app.add_subcommand(
        "capacity", "Analytic common-rate capacity and per-link constraints");
    ChannelArgs cap_ch;
    cap_ch.attach(*cap_cmd);
    std::string cap_format = "table";
    std::string cap_out;
    cap_cmd->add_option("--format", cap_format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
    cap_cmd->add_option("-o,--out", cap_out, "Write output to a file instead of stdout");

    // ---- simulate ----
    auto* sim_cmd = app.add_subcommand(
        "simulate", "Monte Carlo error rates for one (k, n', n_down) operating point");
    ChannelArgs sim_ch;
    sim_ch.attach(*sim_cmd);
    std::size_t sim_k = 4;
    std::size_t sim_np = 24;
    std::size_t sim_nd = 0;
    std::uint64_t sim_trials = 10000;
    std::uint64_t sim_seed = 1;
    std::string sim_format = "csv";
    std::string sim_out, sim_trial_log, sim_dump_code;
    bool sim_resample = false;
    sim_cmd->add_option("-k,--k", sim_k, "Message length in bits")->capture_default_str();
    sim_cmd->add_option("--n-prime", sim_np, "Channel uses per uplink phase")
        ->capture_default_str();
    sim_cmd->add_option("--n-down", sim_nd,
                        "Downlink channel uses (0 = matched, (L-1)*n')");
    sim_cmd->add_option("-t,--trials", sim_trials, "Trial count")->capture_default_str();
    sim_cmd->add_option("-s,--seed", sim_seed, "Master seed")->capture_default_str();
    sim_cmd->add_option("--format", sim_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sim_cmd->add_option("-o,--out", sim_out, "Write output to a file instead of stdout");
    sim_cmd->add_option("--trial-log", sim_trial_log,
                        "Also write a per-trial error CSV to this path");
    sim_cmd->add_option("--dump-code", sim_dump_code,
                        "Also write the sampled code ensemble as JSON to this path");
    sim_cmd->add_flag("--resample-code-every-trial", sim_resample,
                      "Fresh code ensemble per trial (ensemble-average mode)");

    // ---- sweep ----
    auto* sw_cmd = app.add_subcommand(
        "sweep", "Error rates across an n' grid at fixed k, with the analytic capacity");
    ChannelArgs sw_ch;
    sw_ch.attach(*sw_cmd);
    std::size_t sw_k = 4;
    std::string sw_grid = "12,16,24,32,48";
    std::size_t sw_nd = 0;
    std::uint64_t sw_trials = 2000;
    std::uint64_t sw_seed = 1;
    std::string sw_format = "csv";
    std::string sw_out;
    bool sw_resample = false;
    sw_cmd->add_option("-k,--k", sw_k, "Message length in bits")->capture_default_str();
    sw_cmd->add_option("--n-prime", sw_grid, "Comma list of per-phase blocklengths")
        ->capture_default_str();
    sw_cmd->add_option("--n-down", sw_nd,
                       "Fixed downlink channel uses for every point (0 = matched)");
    sw_cmd->add_option("-t,--trials", sw_trials, "Trials per grid point")
        ->capture_default_str();
    sw_cmd->add_option("-s,--seed", sw_seed, "Master seed")->capture_default_str();
    sw_cmd->add_option("--format", sw_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sw_cmd->add_option("-o,--out", sw_out, "Write output to a file instead of stdout");
    sw_cmd->add_flag("--resample-code-every-trial", sw_resample,
                     "Fresh code ensemble per trial (ensemble-average mode)");

    CLI11_PARSE(app, argc, argv);

    if (cap_cmd->parsed()) {
        const auto report = mwrc::common_rate_capacity(cap_ch.resolve());
        emit(cap_format == "json" ? report.to_json() : report.to_table(), cap_out);
        return 0;
    }

    if (sim_cmd->parsed()) {
        mwrc::SessionConfig cfg;
        cfg.params = sim_ch.resolve();
        cfg.k = sim_k;
        cfg.n_prime = sim_np;
        cfg.n_down = sim_nd != 0 ? sim_nd : (cfg.params.users - 1) * sim_np;
        cfg.seed = sim_seed;
        cfg.validate();

        mwrc::SimulateOptions options;
        options.resample_code_every_trial = sim_resample;
        std::vector<mwrc::TrialOutcome> log;
        if (!sim_trial_log.empty()) options.trial_log = &log;

        const auto point = mwrc::estimate_error_rates(cfg, sim_trials, options);
        emit(sim_format == "json"
                 ? mwrc::point_to_json(point)
                 : mwrc::points_to_csv(std::span(&point, 1)),
             sim_out);
        if (!sim_trial_log.empty())
            write_file(sim_trial_log, mwrc::trial_outcomes_to_csv(log));
        if (!sim_dump_code.empty()) {
            const auto codes = mwrc::build_session_codes(
                cfg, mwrc::streams::point_code_seed(cfg.seed, 0, 0));
            write_file(sim_dump_code, mwrc::ensemble_to_json(codes.uplink));
        }
        return 0;
    }

    mwrc::SweepSpec spec;
    spec.params = sw_ch.resolve();
    spec.k = sw_k;
    {
        std::stringstream ss(sw_grid);
        std::string item;
        while (std::getline(ss, item, ','))
            spec.n_prime_grid.push_back(static_cast<std::size_t>(std::stoull(item)));
    }
    spec.n_down_fixed = sw_nd;
    spec.trials_per_point = sw_trials;
    spec.seed = sw_seed;
    spec.resample_code_every_trial = sw_resample;
    spec.validate();

    const auto result = mwrc::rate_sweep(spec);
    emit(sw_format == "json" ? mwrc::sweep_to_json(result)
                             : mwrc::points_to_csv(result.points),
         sw_out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
