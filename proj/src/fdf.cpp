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

#include "mwrc/fdf.hpp"

#include <stdexcept>

namespace mwrc {

void SessionConfig::validate() const {
    params.validate();
    if (k < 1 || n_prime < 1 || n_down < 1)
        throw std::invalid_argument("SessionConfig: k, n_prime, n_down must be >= 1");
    if (k > kMaxMessageBits)
        throw std::invalid_argument("SessionConfig: k exceeds the ML-decode cap");
    // The downlink decoder searches over (L-1)k message bits.
    if ((params.users - 1) * k > kMaxMessageBits)
        throw std::invalid_argument(
            "SessionConfig: (L-1)*k exceeds the ML-decode cap for the downlink");
}

FunctionSet FunctionSet::from_messages(std::span<const BitVec> messages) {
    if (messages.size() < 2)
        throw std::invalid_argument("FunctionSet: need at least 2 messages");
    FunctionSet fs;
    fs.v.reserve(messages.size() - 1);
    for (std::size_t l = 0; l + 1 < messages.size(); ++l)
        fs.v.push_back(messages[l] ^ messages[l + 1]);
    return fs;
}

BitVec FunctionSet::concat() const {
    std::size_t total = 0;
    for (const BitVec& entry : v) total += entry.size();
    BitVec out(total);
    std::size_t offset = 0;
    for (const BitVec& entry : v) {
        for (std::size_t t = 0; t < entry.size(); ++t)
            if (entry.get(t)) out.set(offset + t, true);
        offset += entry.size();
    }
    return out;
}

FunctionSet FunctionSet::split(const BitVec& concatenated, unsigned users,
                               std::size_t k) {
    if (users < 2 || concatenated.size() != (users - 1) * k)
        throw std::invalid_argument("FunctionSet::split: length != (L-1)*k");
    FunctionSet fs;
    fs.v.reserve(users - 1);
    for (unsigned l = 0; l + 1 < users; ++l) {
        BitVec entry(k);
        for (std::size_t t = 0; t < k; ++t)
            if (concatenated.get(l * k + t)) entry.set(t, true);
        fs.v.push_back(std::move(entry));
    }
    return fs;
}

PhaseResult uplink_phase(const SessionConfig& cfg, unsigned l, const BitVec& w_l,
                         const BitVec& w_l1, const CodeEnsemble& codes,
                         NoiseSource& noise) {
    const unsigned users = cfg.users();
    if (l < 1 || l > users - 1)
        throw std::invalid_argument("uplink_phase: phase index out of range");
    if (w_l.size() != cfg.k || w_l1.size() != cfg.k)
        throw std::invalid_argument("uplink_phase: message length != k");

    // Only users l and l+1 transmit; the rest contribute all-zero vectors
    // (no dither).
    std::vector<BitVec> inputs(users, BitVec(cfg.n_prime));
    inputs[l - 1] = encode(codes.user_code(l), w_l);
    inputs[l] = encode(codes.user_code(l + 1), w_l1);

    const BitVec e0 = noise.bernoulli(cfg.params.uplink_rho(), cfg.n_prime);
    const BitVec y0 = uplink_transmit(inputs, e0);

    const LinearCode pair_code =
        combined_code(codes.user_code(l), codes.user_code(l + 1));
    PhaseResult result;
    result.v_hat = ml_decode(pair_code, y0, cfg.params.uplink_rho());
    result.error = result.v_hat != (w_l ^ w_l1);
    return result;
}

UplinkResult relay_uplink(const SessionConfig& cfg, std::span<const BitVec> messages,
                          const CodeEnsemble& codes, std::uint64_t trial) {
    const unsigned users = cfg.users();
    if (messages.size() != users)
        throw std::invalid_argument("relay_uplink: need exactly L messages");

    UplinkResult result;
    result.decoded.v.reserve(users - 1);
    result.phase_errors.reserve(users - 1);
    for (unsigned l = 1; l <= users - 1; ++l) {
        NoiseSource noise(cfg.seed, streams::noise(trial, 0, l));
        PhaseResult phase =
            uplink_phase(cfg, l, messages[l - 1], messages[l], codes, noise);
        result.decoded.v.push_back(std::move(phase.v_hat));
        result.phase_errors.push_back(phase.error);
    }
    return result;
}

std::vector<UserDownlink> downlink_broadcast(const SessionConfig& cfg,
                                             const FunctionSet& fs,
                                             const LinearCode& down_code,
                                             std::uint64_t trial) {
    const unsigned users = cfg.users();
    const BitVec payload = fs.concat();
    if (down_code.k != payload.size() || down_code.n_prime != cfg.n_down)
        throw std::invalid_argument(
            "downlink_broadcast: code does not match (L-1)*k -> n_down");

    // One broadcast codeword; each user sees it through its own BSC.
    const BitVec x0 = encode(down_code, payload);

    std::vector<UserDownlink> out;
    out.reserve(users);
    for (unsigned i = 1; i <= users; ++i) {
        NoiseSource noise(cfg.seed, streams::noise(trial, i, 0));
        const double rho_i = cfg.params.downlink_rho(i);
        const BitVec yi = downlink_transmit(x0, noise.bernoulli(rho_i, cfg.n_down));
        const BitVec decoded = ml_decode(down_code, yi, rho_i);
        UserDownlink ud;
        ud.decoded = FunctionSet::split(decoded, users, cfg.k);
        ud.error = ud.decoded != fs;
        out.push_back(std::move(ud));
    }
    return out;
}

std::vector<BitVec> user_recover(unsigned i, const BitVec& w_i,
                                 const FunctionSet& fs) {
    const unsigned users = static_cast<unsigned>(fs.v.size()) + 1;
    if (i < 1 || i > users)
        throw std::invalid_argument("user_recover: user index out of range");
    for (const BitVec& entry : fs.v)
        if (entry.size() != w_i.size())
            throw std::invalid_argument("user_recover: function length != k");

    std::vector<BitVec> messages(users);
    messages[i - 1] = w_i;
    // Forward chain: W_{j} = V_{j-1,j} xor W_{j-1} for j = i+1 .. L.
    for (unsigned j = i + 1; j <= users; ++j)
        messages[j - 1] = fs.v[j - 2] ^ messages[j - 2];
    // Backward chain: W_{j} = V_{j,j+1} xor W_{j+1} for j = i-1 .. 1.
    for (unsigned j = i - 1; j >= 1; --j)
        messages[j - 1] = fs.v[j - 1] ^ messages[j];
    return messages;
}

TrialOutcome run_trial(const SessionConfig& cfg, std::span<const BitVec> messages,
                       const CodeEnsemble& codes, const LinearCode& down_code,
                       std::uint64_t trial) {
    const unsigned users = cfg.users();

    TrialOutcome outcome;
    outcome.trial = trial;

    UplinkResult uplink = relay_uplink(cfg, messages, codes, trial);
    outcome.relay_phase_errors = uplink.phase_errors;

    const std::vector<UserDownlink> downlink =
        downlink_broadcast(cfg, uplink.decoded, down_code, trial);

    outcome.user_function_errors.reserve(users);
    outcome.user_message_errors.assign(users, std::vector<bool>(users, false));
    for (unsigned i = 1; i <= users; ++i) {
        const FunctionSet& seen = downlink[i - 1].decoded;
        outcome.user_function_errors.push_back(downlink[i - 1].error);

        const std::vector<BitVec> recovered =
            user_recover(i, messages[i - 1], seen);
        for (unsigned j = 1; j <= users; ++j) {
            if (j == i) continue;
            if (recovered[j - 1] != messages[j - 1]) {
                outcome.user_message_errors[i - 1][j - 1] = true;
                outcome.end_to_end_error = true;
            }
        }
    }
    return outcome;
}

SessionCodes build_session_codes(const SessionConfig& cfg, std::uint64_t code_seed) {
    cfg.validate();
    SessionCodes codes;
    codes.uplink = build_ensemble(
        CodeEnsembleSpec{cfg.k, cfg.n_prime, cfg.users(), code_seed});
    // The downlink code gets its own seed space so it is independent of
    // the uplink ensemble drawn from the same code_seed.
    constexpr std::uint64_t kDownlinkSalt = 0xd01f5eedc0deb00dULL;
    codes.downlink =
        sample_code((cfg.users() - 1) * cfg.k, cfg.n_down, code_seed ^ kDownlinkSalt);
    return codes;
}

std::string trial_outcomes_to_csv(std::span<const TrialOutcome> outcomes) {
    std::string csv = "trial,phase_errors,user_fn_errors,e2e_error\n";
    for (const TrialOutcome& t : outcomes) {
        csv += std::to_string(t.trial);
        csv += ',';
        for (const bool e : t.relay_phase_errors) csv += e ? '1' : '0';
        csv += ',';
        for (const bool e : t.user_function_errors) csv += e ? '1' : '0';
        csv += ',';
        csv += t.end_to_end_error ? '1' : '0';
        csv += '\n';
    }
    return csv;
}

}  // namespace mwrc
