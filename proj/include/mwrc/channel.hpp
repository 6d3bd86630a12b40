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

#ifndef MWRC_CHANNEL_HPP
#define MWRC_CHANNEL_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mwrc/gf2.hpp"

namespace mwrc {

/// Channel geometry: L users around one relay, crossover probability per
/// link. rho[0] is the uplink (users -> relay); rho[i], i >= 1, the
/// downlink to user i. rho has exactly L+1 entries, each in [0, 1].
struct ChannelParams {
    unsigned users = 0;
    std::vector<double> rho;

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;

    double uplink_rho() const { return rho.at(0); }
    double downlink_rho(unsigned user) const { return rho.at(user); }

    /// Parse {"L": 3, "rho": [0.05, 0.05, 0.05, 0.05]}.
    static ChannelParams from_json(const std::string& text);
    std::string to_json() const;
};

/// Deterministic stream identifiers. Every random draw in a session is keyed
/// by (master seed, stream id, draw index), so parallel runs reproduce the
/// serial ones bit for bit no matter how trials are scheduled.
namespace streams {

/// Noise on link `link` (0 = uplink) during uplink phase `phase`
/// (0 for downlink noise), within trial `trial`.
std::uint64_t noise(std::uint64_t trial, unsigned link, unsigned phase);

/// Per-trial uniform message material.
std::uint64_t messages(std::uint64_t trial);

/// Shared generator matrix of a code ensemble.
std::uint64_t code_matrix();

/// Dither vector of user `user` (1-based) in a code ensemble; user 0 is
/// the relay's downlink dither.
std::uint64_t code_dither(unsigned user);

/// Derives a per-sweep-point (or per-trial, in resampling mode) code seed
/// from the master seed.
std::uint64_t point_code_seed(std::uint64_t master_seed, std::uint64_t point,
                              std::uint64_t trial);

}  // namespace streams

/// One reproducible random bit stream.
///
/// Draws come from a std::mt19937_64 engine whose raw 64-bit outputs are
/// fully specified by the standard; the per-stream seed is derived from
/// (master_seed, stream_id) with a SplitMix64-style mix. Bernoulli bits
/// compare one raw draw per bit against a fixed-point threshold, so the
/// emitted bits do not depend on any implementation-defined distribution.
class NoiseSource {
  public:
    NoiseSource(std::uint64_t master_seed, std::uint64_t stream_id);

    /// i.i.d. Bernoulli(rho) bits; one draw per bit. rho outside [0, 1]
    /// is a parameter error.
    BitVec bernoulli(double rho, std::size_t len);

    /// i.i.d. uniform bits, 64 per draw.
    BitVec uniform(std::size_t len);

    std::uint64_t next_u64() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

/// Y_0 = X_1 xor ... xor X_L xor E_0. All vectors must share one length.
BitVec uplink_transmit(std::span<const BitVec> inputs, const BitVec& e0);

/// Y_i = X_0 xor E_i.
BitVec downlink_transmit(const BitVec& x0, const BitVec& ei);

}  // namespace mwrc

#endif  // MWRC_CHANNEL_HPP
