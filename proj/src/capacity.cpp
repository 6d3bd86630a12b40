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

#include "mwrc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace mwrc {

double binary_entropy(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("binary_entropy: rho must lie in [0, 1]");
    if (rho == 0.0 || rho == 1.0) return 0.0;
    return -rho * std::log2(rho) - (1.0 - rho) * std::log2(1.0 - rho);
}

double bsc_capacity(double rho) { return 1.0 - binary_entropy(rho); }

RateReport common_rate_capacity(const ChannelParams& params) {
    params.validate();
    const double divisor = static_cast<double>(params.users - 1);

    RateReport report;
    report.per_link_constraints.reserve(params.rho.size());
    double max_entropy = 0.0;
    for (const double r : params.rho) {
        const double h = binary_entropy(r);
        max_entropy = std::max(max_entropy, h);
        report.per_link_constraints.push_back((1.0 - h) / divisor);
    }

    const auto min_it = std::min_element(report.per_link_constraints.begin(),
                                         report.per_link_constraints.end());
    report.bottleneck_link =
        static_cast<std::size_t>(min_it - report.per_link_constraints.begin());
    report.capacity = *min_it;
    // Same quantity through the max-entropy route; the two must agree.
    report.upper_bound = (1.0 - max_entropy) / divisor;
    report.cdf_baseline_rate = cdf_baseline_rate(params);
    return report;
}

double cdf_baseline_rate(const ChannelParams& params) {
    params.validate();
    const double users = static_cast<double>(params.users);
    double rate = bsc_capacity(params.uplink_rho()) / users;
    for (unsigned i = 1; i <= params.users; ++i)
        rate = std::min(rate, bsc_capacity(params.rho[i]) / (users - 1.0));
    return rate;
}

std::string RateReport::to_table() const {
    std::string out;
    char line[128];
    std::snprintf(line, sizeof line, "%-22s %.6f bits/use\n", "capacity", capacity);
    out += line;
    std::snprintf(line, sizeof line, "%-22s %.6f bits/use\n", "upper bound",
                  upper_bound);
    out += line;
    out += "per-link constraints (1 - H(rho_i)) / (L - 1):\n";
    for (std::size_t i = 0; i < per_link_constraints.size(); ++i) {
        char label[64];
        if (i == 0)
            std::snprintf(label, sizeof label, "link 0 (uplink)");
        else
            std::snprintf(label, sizeof label, "link %zu (user %zu)", i, i);
        std::snprintf(line, sizeof line, "  %-20s %.6f%s\n", label,
                      per_link_constraints[i],
                      i == bottleneck_link ? "  <- bottleneck" : "");
        out += line;
    }
    std::snprintf(line, sizeof line,
                  "%-22s %.6f bits/use  (this artifact's variant)\n", "cdf baseline",
                  cdf_baseline_rate);
    out += line;
    return out;
}

std::string RateReport::to_json() const {
    nlohmann::json j;
    j["capacity"] = capacity;
    j["upper_bound"] = upper_bound;
    j["per_link_constraints"] = per_link_constraints;
    j["bottleneck_link"] = bottleneck_link;
    j["cdf_baseline_rate"] = cdf_baseline_rate;
    j["cdf_baseline_note"] = "this artifact's variant";
    return j.dump(2);
}

}  // namespace mwrc
