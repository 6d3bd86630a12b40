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

#ifndef MWRC_CAPACITY_HPP
#define MWRC_CAPACITY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "mwrc/channel.hpp"

namespace mwrc {

/// Closed-form rate quantities for one channel configuration, all in
/// bits per channel use.
struct RateReport {
    /// Common-rate capacity, computed as the minimum over the per-link
    /// constraints.
    double capacity = 0.0;
    /// Cut-set upper bound, computed from the max-entropy form. Equals
    /// `capacity` (the bound is tight); both routes are kept so they can
    /// be checked against each other.
    double upper_bound = 0.0;
    /// (1 - H(rho_i)) / (L - 1) for i = 0..L.
    std::vector<double> per_link_constraints;
    /// Index attaining the minimum (first on ties; 0 = uplink).
    std::size_t bottleneck_link = 0;
    /// Complete-decode-forward reference rate; this artifact's variant,
    /// see cdf_baseline_rate().
    double cdf_baseline_rate = 0.0;

    std::string to_table() const;
    std::string to_json() const;
};

/// Binary entropy in bits, with the endpoint convention 0*log2(0) = 0.
/// rho outside [0, 1] is a parameter error.
double binary_entropy(double rho);

/// 1 - H(rho): capacity of the binary-symmetric channel.
double bsc_capacity(double rho);

/// Common-rate capacity min_i (1 - H(rho_i)) / (L - 1) with per-link
/// breakdown, bottleneck index and baseline attached.
RateReport common_rate_capacity(const ChannelParams& params);

/// Complete-decode-forward reference rate, this artifact's variant: the
/// relay decodes each user's message in its own 1/L uplink time slice,
/// then broadcasts the same L-1 pairwise functions as the main strategy.
/// min((1 - H(rho_0)) / L, min_{i>=1} (1 - H(rho_i)) / (L - 1)).
double cdf_baseline_rate(const ChannelParams& params);

}  // namespace mwrc

#endif  // MWRC_CAPACITY_HPP
