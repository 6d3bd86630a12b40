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

#include "mwrc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace mwrc {

double wilson_halfwidth(double p_hat, std::uint64_t n, double z) {
    if (n == 0) return 0.0;
    const double nn = static_cast<double>(n);
    const double z2 = z * z;
    return z * std::sqrt(p_hat * (1.0 - p_hat) / nn + z2 / (4.0 * nn * nn)) /
           (1.0 + z2 / nn);
}

unsigned worker_count() {
    unsigned requested = 0;
    if (const char* env = std::getenv("MWRC_THREADS"); env && *env) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end == env || *end != '\0')
            throw std::invalid_argument("MWRC_THREADS must be a non-negative integer");
        requested = static_cast<unsigned>(value);
    }
    if (requested == 0) requested = std::thread::hardware_concurrency();
    return std::max(1u, requested);
}

namespace {

// Integer tallies commute, so summing per-worker counts reproduces the
// serial result for any partition.
struct Counts {
    std::uint64_t relay_phase_errors = 0;
    std::uint64_t user_fn_errors = 0;
    std::uint64_t e2e_errors = 0;

    void absorb(const TrialOutcome& outcome) {
        for (const bool e : outcome.relay_phase_errors) relay_phase_errors += e;
        for (const bool e : outcome.user_function_errors) user_fn_errors += e;
        e2e_errors += outcome.end_to_end_error;
    }

    Counts& operator+=(const Counts& other) {
        relay_phase_errors += other.relay_phase_errors;
        user_fn_errors += other.user_fn_errors;
        e2e_errors += other.e2e_errors;
        return *this;
    }
};

std::vector<BitVec> draw_messages(const SessionConfig& cfg, std::uint64_t trial) {
    NoiseSource src(cfg.seed, streams::messages(trial));
    std::vector<BitVec> messages;
    messages.reserve(cfg.users());
    for (unsigned u = 0; u < cfg.users(); ++u) messages.push_back(src.uniform(cfg.k));
    return messages;
}

}  // namespace

PointRecord estimate_error_rates(const SessionConfig& cfg, std::uint64_t trials,
                                 const SimulateOptions& options) {
    cfg.validate();
    if (trials < 1)
        throw std::invalid_argument("estimate_error_rates: trials must be >= 1");

    SessionCodes fixed_codes;
    if (!options.resample_code_every_trial)
        fixed_codes = build_session_codes(
            cfg, streams::point_code_seed(cfg.seed, options.point_index, 0));

    if (options.trial_log) options.trial_log->assign(trials, TrialOutcome{});

    const auto run_range = [&](std::uint64_t begin, std::uint64_t end, Counts& counts) {
        for (std::uint64_t t = begin; t < end; ++t) {
            const std::vector<BitVec> messages = draw_messages(cfg, t);
            SessionCodes per_trial;
            const SessionCodes* codes = &fixed_codes;
            if (options.resample_code_every_trial) {
                per_trial = build_session_codes(
                    cfg, streams::point_code_seed(cfg.seed, options.point_index, t + 1));
                codes = &per_trial;
            }
            TrialOutcome outcome =
                run_trial(cfg, messages, codes->uplink, codes->downlink, t);
            counts.absorb(outcome);
            if (options.trial_log) (*options.trial_log)[t] = std::move(outcome);
        }
    };

    Counts total;
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(worker_count(), trials));
    if (workers <= 1) {
        run_range(0, trials, total);
    } else {
        std::vector<Counts> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = trials * w / workers;
            const std::uint64_t end = trials * (w + 1) / workers;
            pool.emplace_back(run_range, begin, end, std::ref(partial[w]));
        }
        for (std::thread& th : pool) th.join();
        for (const Counts& c : partial) total += c;
    }

    const auto users = cfg.users();
    PointRecord record;
    record.users = users;
    record.k = cfg.k;
    record.n_prime = cfg.n_prime;
    record.n_down = cfg.n_down;
    record.rho = cfg.params.rho;
    record.rate = cfg.rate();
    record.uplink_rate = cfg.uplink_rate();
    record.downlink_rate = cfg.downlink_rate();
    record.relay_error_rate = static_cast<double>(total.relay_phase_errors) /
                              (static_cast<double>(trials) * (users - 1));
    record.user_fn_error_rate = static_cast<double>(total.user_fn_errors) /
                                (static_cast<double>(trials) * users);
    record.e2e_error_rate = static_cast<double>(total.e2e_errors) /
                            static_cast<double>(trials);
    record.e2e_ci95_halfwidth = wilson_halfwidth(record.e2e_error_rate, trials);
    record.trials = trials;
    record.seed = cfg.seed;
    return record;
}

void SweepSpec::validate() const {
    params.validate();
    if (n_prime_grid.empty())
        throw std::invalid_argument("SweepSpec: empty n_prime grid");
    if (trials_per_point < 1)
        throw std::invalid_argument("SweepSpec: trials_per_point must be >= 1");
    for (const std::size_t np : n_prime_grid) {
        SessionConfig cfg{params, k, np, n_down_for(np), seed};
        cfg.validate();  // enforces the ML-decode caps per point
    }
}

std::size_t SweepSpec::n_down_for(std::size_t n_prime) const {
    return n_down_fixed != 0 ? n_down_fixed : (params.users - 1) * n_prime;
}

SweepResult rate_sweep(const SweepSpec& spec) {
    spec.validate();
    SweepResult result;
    result.report = common_rate_capacity(spec.params);
    result.points.reserve(spec.n_prime_grid.size());
    for (std::size_t i = 0; i < spec.n_prime_grid.size(); ++i) {
        const std::size_t np = spec.n_prime_grid[i];
        SessionConfig cfg{spec.params, spec.k, np, spec.n_down_for(np), spec.seed};
        SimulateOptions options;
        options.resample_code_every_trial = spec.resample_code_every_trial;
        options.point_index = i;
        result.points.push_back(
            estimate_error_rates(cfg, spec.trials_per_point, options));
    }
    return result;
}

namespace {

std::string format_g6(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

}  // namespace

std::string points_to_csv(std::span<const PointRecord> points) {
    if (points.empty()) return "";
    std::string csv = "L,k,n_prime,n_down";
    for (std::size_t i = 0; i < points.front().rho.size(); ++i)
        csv += ",rho" + std::to_string(i);
    csv += ",R,R_up,R_down,relay_err,user_fn_err,e2e_err,e2e_ci95,trials,seed\n";
    for (const PointRecord& p : points) {
        csv += std::to_string(p.users);
        csv += ',' + std::to_string(p.k);
        csv += ',' + std::to_string(p.n_prime);
        csv += ',' + std::to_string(p.n_down);
        for (const double r : p.rho) csv += ',' + format_g6(r);
        csv += ',' + format_g6(p.rate);
        csv += ',' + format_g6(p.uplink_rate);
        csv += ',' + format_g6(p.downlink_rate);
        csv += ',' + format_g6(p.relay_error_rate);
        csv += ',' + format_g6(p.user_fn_error_rate);
        csv += ',' + format_g6(p.e2e_error_rate);
        csv += ',' + format_g6(p.e2e_ci95_halfwidth);
        csv += ',' + std::to_string(p.trials);
        csv += ',' + std::to_string(p.seed);
        csv += '\n';
    }
    return csv;
}

namespace {

nlohmann::json point_json(const PointRecord& p) {
    nlohmann::json j;
    j["L"] = p.users;
    j["k"] = p.k;
    j["n_prime"] = p.n_prime;
    j["n_down"] = p.n_down;
    j["rho"] = p.rho;
    j["R"] = p.rate;
    j["R_up"] = p.uplink_rate;
    j["R_down"] = p.downlink_rate;
    j["relay_err"] = p.relay_error_rate;
    j["user_fn_err"] = p.user_fn_error_rate;
    j["e2e_err"] = p.e2e_error_rate;
    j["e2e_ci95"] = p.e2e_ci95_halfwidth;
    j["trials"] = p.trials;
    j["seed"] = p.seed;
    return j;
}

}  // namespace

std::string point_to_json(const PointRecord& point) {
    return point_json(point).dump(2);
}

std::string sweep_to_json(const SweepResult& result) {
    nlohmann::json j;
    j["capacity_report"] = nlohmann::json::parse(result.report.to_json());
    j["points"] = nlohmann::json::array();
    for (const PointRecord& p : result.points) j["points"].push_back(point_json(p));
    return j.dump(2);
}

}  // namespace mwrc
