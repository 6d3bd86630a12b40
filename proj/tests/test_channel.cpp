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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "mwrc/channel.hpp"

using mwrc::BitVec;
using mwrc::ChannelParams;
using mwrc::NoiseSource;

TEST_CASE("ChannelParams validation") {
    ChannelParams p;
    p.users = 3;
    p.rho = {0.1, 0.2, 0.3, 0.4};
    CHECK_NOTHROW(p.validate());
    CHECK(p.uplink_rho() == 0.1);
    CHECK(p.downlink_rho(2) == 0.3);

    ChannelParams one_user{1, {0.1, 0.1}};
    CHECK_THROWS_AS(one_user.validate(), std::invalid_argument);
    ChannelParams short_rho{3, {0.1, 0.1}};
    CHECK_THROWS_AS(short_rho.validate(), std::invalid_argument);
    ChannelParams out_of_range{2, {0.1, 1.5, 0.1}};
    CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);
    ChannelParams negative{2, {-0.1, 0.1, 0.1}};
    CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}

TEST_CASE("ChannelParams JSON round trip") {
    const auto p = ChannelParams::from_json(R"({"L": 3, "rho": [0.05, 0.05, 0.05, 0.05]})");
    CHECK(p.users == 3);
    REQUIRE(p.rho.size() == 4);
    CHECK(p.rho[0] == 0.05);

    const auto q = ChannelParams::from_json(p.to_json());
    CHECK(q.users == p.users);
    CHECK(q.rho == p.rho);

    CHECK_THROWS(ChannelParams::from_json(R"({"L": 3})"));
    CHECK_THROWS(ChannelParams::from_json(R"({"L": 3, "rho": [0.1, 0.1]})"));
}

TEST_CASE("noise streams are deterministic per (seed, id)") {
    NoiseSource a(42, mwrc::streams::noise(7, 0, 1));
    NoiseSource b(42, mwrc::streams::noise(7, 0, 1));
    CHECK(a.bernoulli(0.3, 1000) == b.bernoulli(0.3, 1000));
    CHECK(a.uniform(1000) == b.uniform(1000));
    CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct stream ids give distinct sequences") {
    // Different trial, link, phase, or purpose tags must all decorrelate.
    const std::vector<std::uint64_t> ids = {
        mwrc::streams::noise(0, 0, 1), mwrc::streams::noise(1, 0, 1),
        mwrc::streams::noise(0, 1, 0), mwrc::streams::noise(0, 0, 2),
        mwrc::streams::messages(0),    mwrc::streams::messages(1),
        mwrc::streams::code_matrix(),  mwrc::streams::code_dither(0),
        mwrc::streams::code_dither(1), mwrc::streams::point_code_seed(42, 0, 0),
    };
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            CHECK(ids[i] != ids[j]);
            NoiseSource a(42, ids[i]);
            NoiseSource b(42, ids[j]);
            CHECK(a.uniform(4096) != b.uniform(4096));
        }
}

TEST_CASE("seed changes the stream") {
    NoiseSource a(1, mwrc::streams::messages(0));
    NoiseSource b(2, mwrc::streams::messages(0));
    CHECK(a.uniform(4096) != b.uniform(4096));
}

TEST_CASE("bernoulli endpoint probabilities are exact") {
    NoiseSource src(9, 0);
    const BitVec zeros = src.bernoulli(0.0, 100);
    CHECK(zeros.all_zero());
    const BitVec ones = src.bernoulli(1.0, 100);
    CHECK(ones.popcount() == 100);
    // Canonical padding even when the fill is all-ones.
    CHECK((ones.words().back() >> (100 % 64)) == 0);
    CHECK_THROWS_AS(src.bernoulli(-0.01, 10), std::invalid_argument);
    CHECK_THROWS_AS(src.bernoulli(1.01, 10), std::invalid_argument);
}

TEST_CASE("bernoulli empirical rate sits in the 3-sigma band") {
    // Binomial(1e5, 0.1): sigma/len ~ 0.00095, band [0.094, 0.106].
    NoiseSource src(1234, mwrc::streams::noise(0, 0, 1));
    const std::size_t len = 100000;
    const BitVec e = src.bernoulli(0.1, len);
    const double rate = static_cast<double>(e.popcount()) / len;
    CHECK(rate > 0.094);
    CHECK(rate < 0.106);
}

TEST_CASE("uniform bits are balanced") {
    NoiseSource src(77, mwrc::streams::messages(3));
    const std::size_t len = 100000;
    const BitVec u = src.uniform(len);
    const double rate = static_cast<double>(u.popcount()) / len;
    CHECK(rate > 0.4953);  // 3 sigma, sigma/len ~ 0.00158
    CHECK(rate < 0.5047);
}

TEST_CASE("bernoulli rates track rho across the range") {
    for (double rho : {0.25, 0.5, 0.75, 0.9}) {
        NoiseSource src(5, mwrc::streams::noise(0, 0, 1));
        const std::size_t len = 100000;
        const double rate = static_cast<double>(src.bernoulli(rho, len).popcount()) / len;
        const double sigma = std::sqrt(rho * (1 - rho) / len);
        CHECK(std::abs(rate - rho) < 4 * sigma);
    }
}

TEST_CASE("uplink_transmit worked examples") {
    const BitVec zero(4);
    const std::vector<BitVec> silent = {zero, zero};
    CHECK(mwrc::uplink_transmit(silent, zero).all_zero());

    const BitVec x = BitVec::from_bits("1010");
    const std::vector<BitVec> cancel = {x, x};
    CHECK(mwrc::uplink_transmit(cancel, zero).all_zero());

    const std::vector<BitVec> pair = {BitVec::from_bits("1010"), BitVec::from_bits("0110")};
    CHECK(mwrc::uplink_transmit(pair, BitVec::from_bits("0001")) == BitVec::from_bits("1101"));

    const std::vector<BitVec> bad = {BitVec(4), BitVec(5)};
    CHECK_THROWS_AS(mwrc::uplink_transmit(bad, BitVec(4)), std::invalid_argument);
}

TEST_CASE("uplink_transmit is permutation invariant") {
    std::mt19937_64 rng(31337);
    std::vector<BitVec> inputs;
    BitVec e0(96);
    for (int i = 0; i < 4; ++i) {
        BitVec v(96);
        for (std::size_t t = 0; t < 96; ++t) v.set(t, (rng() & 1) != 0);
        inputs.push_back(v);
    }
    for (std::size_t t = 0; t < 96; ++t) e0.set(t, (rng() & 1) != 0);

    const BitVec y = mwrc::uplink_transmit(inputs, e0);
    std::sort(inputs.begin(), inputs.end(),
              [](const BitVec& a, const BitVec& b) { return a.to_hex() < b.to_hex(); });
    CHECK(mwrc::uplink_transmit(inputs, e0) == y);
    std::reverse(inputs.begin(), inputs.end());
    CHECK(mwrc::uplink_transmit(inputs, e0) == y);
}

TEST_CASE("downlink_transmit worked examples") {
    const BitVec x0 = BitVec::from_bits("1100");
    CHECK(mwrc::downlink_transmit(x0, BitVec(4)) == x0);
    CHECK(mwrc::downlink_transmit(x0, BitVec::from_bits("1111")) == BitVec::from_bits("0011"));
    CHECK(mwrc::downlink_transmit(x0, BitVec::from_bits("0101")) == BitVec::from_bits("1001"));
}
