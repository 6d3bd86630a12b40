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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "mwrc/codes.hpp"

using mwrc::BitMatrix;
using mwrc::BitVec;
using mwrc::CodeEnsembleSpec;
using mwrc::LinearCode;

namespace {

// Brute-force rescorer written against the decoder, not with it: codewords
// from explicit bit loops, messages visited in ascending integer order, so
// strict improvement reproduces the lowest-message tie-break.
BitVec oracle_encode(const LinearCode& code, std::uint64_t m) {
    BitVec x = code.dither;
    for (std::size_t r = 0; r < code.k; ++r) {
        if (((m >> r) & 1) == 0) continue;
        for (std::size_t c = 0; c < code.n_prime; ++c)
            if (code.g.get(r, c)) x.set(c, !x.get(c));
    }
    return x;
}

BitVec oracle_ml(const LinearCode& code, const BitVec& y, double rho) {
    if (rho == 0.5) return BitVec(code.k);
    const bool minimize = rho < 0.5;
    std::uint64_t best_msg = 0;
    std::size_t best_score = 0;
    bool first = true;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << code.k); ++m) {
        const BitVec x = oracle_encode(code, m);
        std::size_t d = 0;
        for (std::size_t t = 0; t < code.n_prime; ++t)
            if (x.get(t) != y.get(t)) ++d;
        if (first || (minimize ? d < best_score : d > best_score)) {
            best_score = d;
            best_msg = m;
            first = false;
        }
    }
    return BitVec::from_u64(best_msg, code.k);
}

BitVec random_vec(std::mt19937_64& rng, std::size_t len) {
    BitVec v(len);
    for (std::size_t t = 0; t < len; ++t) v.set(t, (rng() & 1) != 0);
    return v;
}

}  // namespace

TEST_CASE("ensemble sampling is deterministic and well shaped") {
    const CodeEnsembleSpec spec{4, 16, 3, 99};
    const auto a = mwrc::build_ensemble(spec);
    const auto b = mwrc::build_ensemble(spec);
    CHECK(a.g == b.g);
    CHECK(a.dithers == b.dithers);

    CHECK(a.g.rows() == 4);
    CHECK(a.g.cols() == 16);
    REQUIRE(a.dithers.size() == 3);
    for (const auto& d : a.dithers) CHECK(d.size() == 16);
    CHECK(a.dithers[0] != a.dithers[1]);  // fresh dither per user

    CodeEnsembleSpec other = spec;
    other.seed = 100;
    CHECK(mwrc::build_ensemble(other).g != a.g);

    const LinearCode c2 = a.user_code(2);
    CHECK(c2.k == 4);
    CHECK(c2.n_prime == 16);
    CHECK(c2.dither == a.dithers[1]);
    CHECK_THROWS_AS(a.user_code(0), std::invalid_argument);
    CHECK_THROWS_AS(a.user_code(4), std::invalid_argument);
}

TEST_CASE("generator entries are balanced") {
    // 10^4 Bernoulli(0.5) entries: 3-sigma band [0.485, 0.515].
    const auto e = mwrc::build_ensemble({100, 100, 2, 7});
    std::size_t ones = 0;
    for (std::size_t r = 0; r < 100; ++r) ones += e.g.row(r).popcount();
    const double frac = static_cast<double>(ones) / (100.0 * 100.0);
    CHECK(frac > 0.485);
    CHECK(frac < 0.515);
}

TEST_CASE("encode worked examples") {
    const auto e = mwrc::build_ensemble({4, 16, 2, 5});
    const LinearCode c = e.user_code(1);

    CHECK(mwrc::encode(c, BitVec(4)) == c.dither);

    LinearCode undithered = c;
    undithered.dither = BitVec(16);
    for (std::size_t j = 0; j < 4; ++j) {
        BitVec ej(4);
        ej.set(j, true);
        CHECK(mwrc::encode(undithered, ej) == c.g.row(j));
    }

    CHECK_THROWS_AS(mwrc::encode(c, BitVec(5)), std::invalid_argument);
}

TEST_CASE("combined code mirrors the pairwise xor of codewords") {
    for (std::uint64_t seed : {1ULL, 2ULL}) {
        const auto e = mwrc::build_ensemble({6, 31, 3, seed});
        const LinearCode c1 = e.user_code(1);
        const LinearCode c2 = e.user_code(2);
        const LinearCode both = mwrc::combined_code(c1, c2);

        CHECK(both.dither == (c1.dither ^ c2.dither));
        CHECK(mwrc::combined_code(c1, c1).dither.all_zero());
        const LinearCode flipped = mwrc::combined_code(c2, c1);
        CHECK(flipped.dither == both.dither);
        CHECK(flipped.g == both.g);

        for (std::uint64_t w1 = 0; w1 < 64; ++w1) {
            const BitVec v1 = BitVec::from_u64(w1, 6);
            const BitVec x1 = mwrc::encode(c1, v1);
            for (std::uint64_t w2 = 0; w2 < 64; ++w2) {
                const BitVec v2 = BitVec::from_u64(w2, 6);
                const BitVec lhs = x1 ^ mwrc::encode(c2, v2);
                if (lhs != mwrc::encode(both, v1 ^ v2)) {
                    FAIL("combining identity violated at seed=", seed, " w1=", w1,
                         " w2=", w2);
                }
            }
        }
    }
}

TEST_CASE("combined code demands a shared generator") {
    const auto e1 = mwrc::build_ensemble({4, 12, 2, 1});
    const auto e2 = mwrc::build_ensemble({4, 12, 2, 2});
    CHECK_THROWS_AS(mwrc::combined_code(e1.user_code(1), e2.user_code(1)),
                    std::invalid_argument);
}

TEST_CASE("ml_decode matches the brute-force oracle") {
    const LinearCode c = mwrc::sample_code(4, 12, 2024);
    std::mt19937_64 rng(0xfeed);
    for (int i = 0; i < 300; ++i) {
        const BitVec y = random_vec(rng, 12);
        CHECK(mwrc::ml_decode(c, y, 0.1) == oracle_ml(c, y, 0.1));
        CHECK(mwrc::ml_decode(c, y, 0.49) == oracle_ml(c, y, 0.49));
        // rho > 0.5 flips the objective to maximum distance.
        CHECK(mwrc::ml_decode(c, y, 0.9) == oracle_ml(c, y, 0.9));
    }
}

TEST_CASE("ml_decode oracle agreement across code shapes") {
    std::mt19937_64 rng(0xbead);
    for (std::size_t k : {1u, 2u, 5u, 7u}) {
        for (std::size_t n : {3u, 64u, 65u}) {
            const LinearCode c = mwrc::sample_code(k, n, 31 * k + n);
            for (int i = 0; i < 40; ++i) {
                const BitVec y = random_vec(rng, n);
                if (mwrc::ml_decode(c, y, 0.2) != oracle_ml(c, y, 0.2)) {
                    FAIL("oracle mismatch at k=", k, " n=", n, " i=", i);
                }
            }
        }
    }
}

TEST_CASE("decode inverts encode on a clean channel") {
    const LinearCode c = mwrc::sample_code(6, 40, 11);
    if (!mwrc::codewords_distinct(c)) {
        MESSAGE("sampled code has colliding codewords; skipping identity check");
        return;
    }
    for (std::uint64_t m = 0; m < 64; ++m) {
        const BitVec w = BitVec::from_u64(m, 6);
        CHECK(mwrc::ml_decode(c, mwrc::encode(c, w), 0.0) == w);
        CHECK(mwrc::ml_decode(c, mwrc::encode(c, w), 0.3) == w);
    }
}

TEST_CASE("single bit flips are corrected when the distance spectrum allows") {
    const LinearCode c = mwrc::sample_code(4, 24, 42);
    // Establish the premise by brute force before asserting the behavior.
    std::size_t min_dist = c.n_prime;
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = a + 1; b < 16; ++b) {
            const BitVec xa = oracle_encode(c, a);
            const BitVec xb = oracle_encode(c, b);
            min_dist = std::min(min_dist, mwrc::hamming_distance(xa, xb));
        }
    REQUIRE(min_dist >= 3);

    for (std::uint64_t m = 0; m < 16; ++m) {
        const BitVec w = BitVec::from_u64(m, 4);
        for (std::size_t t = 0; t < c.n_prime; ++t) {
            BitVec y = mwrc::encode(c, w);
            y.set(t, !y.get(t));
            if (mwrc::ml_decode(c, y, 0.1) != w) FAIL("flip at ", t, " not corrected");
        }
    }
}

TEST_CASE("rho one half returns the tie-break minimum") {
    const LinearCode c = mwrc::sample_code(5, 20, 3);
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i)
        CHECK(mwrc::ml_decode(c, random_vec(rng, 20), 0.5) == BitVec(5));
}

TEST_CASE("engineered full tie resolves to the lowest message") {
    // All-zero generator: every message yields the dither, a total tie.
    LinearCode degenerate;
    degenerate.k = 3;
    degenerate.n_prime = 8;
    degenerate.g = BitMatrix(3, 8);
    degenerate.dither = BitVec(8);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 10; ++i) {
        const BitVec y = random_vec(rng, 8);
        CHECK(mwrc::ml_decode(degenerate, y, 0.2) == BitVec(3));
        CHECK(mwrc::ml_decode(degenerate, y, 0.8) == BitVec(3));
        CHECK(oracle_ml(degenerate, y, 0.2) == BitVec(3));
    }
    CHECK_FALSE(mwrc::codewords_distinct(degenerate));
}

TEST_CASE("repeated decodes are identical") {
    const LinearCode c = mwrc::sample_code(6, 18, 77);
    std::mt19937_64 rng(90);
    const BitVec y = random_vec(rng, 18);
    const BitVec first = mwrc::ml_decode(c, y, 0.25);
    for (int i = 0; i < 5; ++i) CHECK(mwrc::ml_decode(c, y, 0.25) == first);
}

TEST_CASE("collision detection") {
    LinearCode colliding;
    colliding.k = 2;
    colliding.n_prime = 4;
    colliding.g = BitMatrix(2, 4);
    colliding.g.set_row(0, BitVec::from_bits("1010"));
    colliding.g.set_row(1, BitVec::from_bits("1010"));  // equal rows collide
    colliding.dither = BitVec(4);
    CHECK_FALSE(mwrc::codewords_distinct(colliding));

    LinearCode identity;
    identity.k = 2;
    identity.n_prime = 4;
    identity.g = BitMatrix(2, 4);
    identity.g.set_row(0, BitVec::from_bits("1000"));
    identity.g.set_row(1, BitVec::from_bits("0100"));
    identity.dither = BitVec(4);
    CHECK(mwrc::codewords_distinct(identity));
}

TEST_CASE("exhaustive-search cap is enforced") {
    CHECK(mwrc::kMaxMessageBits == 20);
    LinearCode too_big;
    too_big.k = mwrc::kMaxMessageBits + 1;
    too_big.n_prime = 32;
    too_big.g = BitMatrix(too_big.k, 32);
    too_big.dither = BitVec(32);
    CHECK_THROWS_AS(mwrc::ml_decode(too_big, BitVec(32), 0.1), std::invalid_argument);
    CHECK_THROWS_AS(mwrc::codewords_distinct(too_big), std::invalid_argument);
    CHECK_THROWS_AS(mwrc::ml_decode(mwrc::sample_code(2, 4, 1), BitVec(5), 0.1),
                    std::invalid_argument);
}

TEST_CASE("ensemble JSON dump carries the full recipe") {
    const auto e = mwrc::build_ensemble({3, 10, 2, 123});
    const auto text = mwrc::ensemble_to_json(e);
    CHECK(text.find("\"k\": 3") != std::string::npos);
    CHECK(text.find("\"n_prime\": 10") != std::string::npos);
    CHECK(text.find("\"g\"") != std::string::npos);
    CHECK(text.find("\"dithers\"") != std::string::npos);
    CHECK(text.find(e.g.row(0).to_hex()) != std::string::npos);
    CHECK(text.find(e.dithers[1].to_hex()) != std::string::npos);
}
