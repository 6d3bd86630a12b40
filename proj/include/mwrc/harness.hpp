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

#ifndef MWRC_HARNESS_HPP
#define MWRC_HARNESS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mwrc/capacity.hpp"
#include "mwrc/fdf.hpp"

namespace mwrc {

/// Halfwidth of the Wilson score interval for a binomial proportion.
double wilson_halfwidth(double p_hat, std::uint64_t n,
                        double z = 1.959963984540054);

/// Worker cap from the MWRC_THREADS environment variable; 0 or unset means
/// hardware concurrency. Always at least 1.
unsigned worker_count();

/// Aggregated Monte Carlo estimates for one (config, trials) point.
/// relay_error_rate averages over trials x phases, user_fn_error_rate over
/// trials x users, e2e_error_rate over trials.
struct PointRecord {
    unsigned users = 0;
    std::size_t k = 0;
    std::size_t n_prime = 0;
    std::size_t n_down = 0;
    std::vector<double> rho;
    double rate = 0.0;
    double uplink_rate = 0.0;
    double downlink_rate = 0.0;
    double relay_error_rate = 0.0;
    double user_fn_error_rate = 0.0;
    double e2e_error_rate = 0.0;
    double e2e_ci95_halfwidth = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

struct SimulateOptions {
    /// Draw a fresh code ensemble per trial (ensemble-average mode)
    /// instead of one fixed sampled code for the whole point.
    bool resample_code_every_trial = false;
    /// Sweep point index; shifts the code seed so each point gets its own
    /// sampled code.
    std::uint64_t point_index = 0;
    /// When set, filled with one outcome per trial in trial order.
    std::vector<TrialOutcome>* trial_log = nullptr;
};

/// Runs `trials` protocol rounds with fresh uniform messages per trial and
/// noise streams keyed on the absolute trial index. Deterministic in
/// (cfg, trials, options) no matter how many workers MWRC_THREADS allows.
PointRecord estimate_error_rates(const SessionConfig& cfg, std::uint64_t trials,
                                 const SimulateOptions& options = {});

/// Rate sweep: fixed k, n_prime varied across a grid. n_down follows the
/// matched rule n_down = (L-1) * n_prime unless a fixed override is given.
struct SweepSpec {
    ChannelParams params;
    std::size_t k = 0;
    std::vector<std::size_t> n_prime_grid;
    std::size_t n_down_fixed = 0;  ///< 0 = matched rule
    std::uint64_t trials_per_point = 0;
    std::uint64_t seed = 0;
    bool resample_code_every_trial = false;

    void validate() const;
    std::size_t n_down_for(std::size_t n_prime) const;
};

struct SweepResult {
    RateReport report;  ///< analytic rates for the swept channel
    std::vector<PointRecord> points;
};

SweepResult rate_sweep(const SweepSpec& spec);

/// Fixed CSV schema:
/// L,k,n_prime,n_down,rho0,...,rhoL,R,R_up,R_down,relay_err,user_fn_err,
/// e2e_err,e2e_ci95,trials,seed — header row plus one row per point,
/// floating point rendered with 6 significant digits.
std::string points_to_csv(std::span<const PointRecord> points);

std::string point_to_json(const PointRecord& point);
std::string sweep_to_json(const SweepResult& result);

}  // namespace mwrc

#endif  // MWRC_HARNESS_HPP
