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

#include "mwrc/channel.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace mwrc {

void ChannelParams::validate() const {
    if (users < 2)
        throw std::invalid_argument("ChannelParams: need at least 2 users");
    if (rho.size() != static_cast<std::size_t>(users) + 1)
        throw std::invalid_argument(
            "ChannelParams: rho must have exactly L+1 entries (uplink first)");
    for (const double r : rho)
        if (!(r >= 0.0 && r <= 1.0))
            throw std::invalid_argument("ChannelParams: each rho must lie in [0, 1]");
}

ChannelParams ChannelParams::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ChannelParams p;
    p.users = j.at("L").get<unsigned>();
    p.rho = j.at("rho").get<std::vector<double>>();
    p.validate();
    return p;
}

std::string ChannelParams::to_json() const {
    nlohmann::json j;
    j["L"] = users;
    j["rho"] = rho;
    return j.dump();
}

namespace {

// SplitMix64 finalizer (Stafford mix13). Used only to spread structured
// stream labels and seeds before feeding the engine.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

namespace streams {

// Stream labels pack a purpose tag with the indices, then go through the
// mixer, so structurally adjacent streams land far apart in seed space.
namespace {
constexpr std::uint64_t kNoiseTag = 0x01;
constexpr std::uint64_t kMessagesTag = 0x02;
constexpr std::uint64_t kCodeMatrixTag = 0x03;
constexpr std::uint64_t kCodeDitherTag = 0x04;
constexpr std::uint64_t kPointCodeTag = 0x05;
}  // namespace

std::uint64_t noise(std::uint64_t trial, unsigned link, unsigned phase) {
    return mix64((kNoiseTag << 56) ^ (trial << 16) ^
                 (static_cast<std::uint64_t>(link) << 8) ^ phase);
}

std::uint64_t messages(std::uint64_t trial) {
    return mix64((kMessagesTag << 56) ^ trial);
}

std::uint64_t code_matrix() { return mix64(kCodeMatrixTag << 56); }

std::uint64_t code_dither(unsigned user) {
    return mix64((kCodeDitherTag << 56) ^ user);
}

std::uint64_t point_code_seed(std::uint64_t master_seed, std::uint64_t point,
                              std::uint64_t trial) {
    return mix64(master_seed ^ mix64((kPointCodeTag << 56) ^ (point << 24) ^ trial));
}

}  // namespace streams

NoiseSource::NoiseSource(std::uint64_t master_seed, std::uint64_t stream_id)
    : engine_(mix64(master_seed ^ mix64(stream_id))) {}

BitVec NoiseSource::bernoulli(double rho, std::size_t len) {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("bernoulli: rho must lie in [0, 1]");
    BitVec out(len);
    if (rho <= 0.0) return out;
    if (rho >= 1.0) {
        auto w = out.mutable_words();
        for (auto& word : w) word = ~std::uint64_t{0};
        out.mask_padding();
        return out;
    }
    // P(u < threshold) = threshold / 2^64; the double rounding error is
    // ~2^-53 relative, far below anything Monte Carlo can resolve.
    const double scaled = rho * 0x1p64;
    const std::uint64_t threshold =
        scaled >= 0x1p64 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
    for (std::size_t t = 0; t < len; ++t)
        if (engine_() < threshold) out.set(t, true);
    return out;
}

BitVec NoiseSource::uniform(std::size_t len) {
    BitVec out(len);
    auto w = out.mutable_words();
    for (auto& word : w) word = engine_();
    out.mask_padding();
    return out;
}

BitVec uplink_transmit(std::span<const BitVec> inputs, const BitVec& e0) {
    BitVec y = e0;
    for (const BitVec& x : inputs) y ^= x;  // operator^= validates lengths
    return y;
}

BitVec downlink_transmit(const BitVec& x0, const BitVec& ei) { return x0 ^ ei; }

}  // namespace mwrc
