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

#ifndef MWRC_FDF_HPP
#define MWRC_FDF_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mwrc/channel.hpp"
#include "mwrc/codes.hpp"
#include "mwrc/gf2.hpp"

namespace mwrc {

/// One simulated session: L users exchange k-bit messages through the
/// relay. The uplink runs L-1 pairwise phases of n_prime channel uses
/// (n = (L-1) * n_prime in total); the downlink broadcast uses n_down
/// channel uses. n_down defaults to the uplink total but is a separate
/// knob so the two rate constraints can be probed independently.
struct SessionConfig {
    ChannelParams params;
    std::size_t k = 0;
    std::size_t n_prime = 0;
    std::size_t n_down = 0;
    std::uint64_t seed = 0;

    void validate() const;

    unsigned users() const { return params.users; }
    std::size_t uplink_uses() const { return (params.users - 1) * n_prime; }
    double rate() const { return static_cast<double>(k) / uplink_uses(); }
    double uplink_rate() const { return rate(); }
    double downlink_rate() const {
        return static_cast<double>((params.users - 1) * k) / n_down;
    }
};

/// The L-1 pairwise message functions: entry l-1 holds the XOR of the
/// messages of users l and l+1, each a k-bit vector.
struct FunctionSet {
    std::vector<BitVec> v;

    /// Ground truth from a full message tuple.
    static FunctionSet from_messages(std::span<const BitVec> messages);

    /// Concatenation in pair order: the (L-1)k-bit downlink message.
    BitVec concat() const;
    static FunctionSet split(const BitVec& concatenated, unsigned users,
                             std::size_t k);

    friend bool operator==(const FunctionSet&, const FunctionSet&) = default;
};

struct PhaseResult {
    BitVec v_hat;  ///< relay's decode of W_l xor W_{l+1}
    bool error;    ///< v_hat differs from the true function
};

/// Uplink phase l (1-based, l in [1, L-1]): users l and l+1 transmit their
/// codewords, everyone else the all-zero vector; the relay ML-decodes the
/// pair function under the combined code. `noise` supplies E_0 for this
/// phase.
PhaseResult uplink_phase(const SessionConfig& cfg, unsigned l, const BitVec& w_l,
                         const BitVec& w_l1, const CodeEnsemble& codes,
                         NoiseSource& noise);

struct UplinkResult {
    FunctionSet decoded;
    std::vector<bool> phase_errors;  ///< L-1 entries
};

/// All L-1 uplink phases on disjoint noise streams derived from
/// (cfg.seed, trial).
UplinkResult relay_uplink(const SessionConfig& cfg, std::span<const BitVec> messages,
                          const CodeEnsemble& codes, std::uint64_t trial);

struct UserDownlink {
    FunctionSet decoded;
    bool error;  ///< decoded set differs from what the relay sent
};

/// The relay encodes the concatenated function set once and broadcasts it;
/// each user receives it through its own BSC and ML-decodes with its own
/// crossover probability. Returns one entry per user, index i-1 for user i.
std::vector<UserDownlink> downlink_broadcast(const SessionConfig& cfg,
                                             const FunctionSet& fs,
                                             const LinearCode& down_code,
                                             std::uint64_t trial);

/// User i reconstructs every message from its own w_i and the function
/// set: forward through W_{j+1} = V_{j,j+1} xor W_j up to W_L, then
/// backward through W_{j} = V_{j,j+1} xor W_{j+1} down to W_1. Slot i-1 of
/// the result holds w_i itself.
std::vector<BitVec> user_recover(unsigned i, const BitVec& w_i,
                                 const FunctionSet& fs);

struct TrialOutcome {
    std::uint64_t trial = 0;
    std::vector<bool> relay_phase_errors;        ///< L-1 entries
    std::vector<bool> user_function_errors;      ///< L entries
    std::vector<std::vector<bool>> user_message_errors;  ///< L x L, diagonal unused
    bool end_to_end_error = false;  ///< any off-diagonal message error
};

/// Full protocol round: uplink phases, downlink broadcast, and every
/// user's decode chain, all noise drawn from streams keyed on `trial`.
TrialOutcome run_trial(const SessionConfig& cfg, std::span<const BitVec> messages,
                       const CodeEnsemble& codes, const LinearCode& down_code,
                       std::uint64_t trial);

/// Uplink ensemble (shared g, L dithers) plus the downlink broadcast code
/// with message length (L-1)k and codeword length n_down, all from
/// `code_seed`.
struct SessionCodes {
    CodeEnsemble uplink;
    LinearCode downlink;
};

SessionCodes build_session_codes(const SessionConfig& cfg, std::uint64_t code_seed);

/// CSV batch of trial outcomes: header plus one row per trial, error flags
/// rendered as '0'/'1' bitstrings.
std::string trial_outcomes_to_csv(std::span<const TrialOutcome> outcomes);

}  // namespace mwrc

#endif  // MWRC_FDF_HPP
