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

#ifndef MWRC_CODES_HPP
#define MWRC_CODES_HPP

#include <cstdint>
#include <vector>

#include "mwrc/channel.hpp"
#include "mwrc/gf2.hpp"

namespace mwrc {

/// Exhaustive ML search visits all 2^k candidates; k above this cap is a
/// capability error, not a correctness bug.
inline constexpr std::size_t kMaxMessageBits = 20;

/// Random linear block code with dither: a message w encodes to
/// (w * g) xor dither. The generator matrix may be shared between codes
/// while each carries its own dither; random g is not guaranteed
/// injective, so decoders must expect codeword collisions.
struct LinearCode {
    std::size_t k = 0;        ///< message bits
    std::size_t n_prime = 0;  ///< codeword bits
    BitMatrix g;              ///< k x n_prime
    BitVec dither;            ///< length n_prime
};

/// Recipe for one ensemble: a shared generator matrix plus `users`
/// per-user dithers, all entries i.i.d. uniform, reproducible from `seed`.
struct CodeEnsembleSpec {
    std::size_t k = 0;
    std::size_t n_prime = 0;
    unsigned users = 0;
    std::uint64_t seed = 0;
};

struct CodeEnsemble {
    BitMatrix g;
    std::vector<BitVec> dithers;  ///< dithers[i] belongs to user i+1

    std::size_t k() const { return g.rows(); }
    std::size_t n_prime() const { return g.cols(); }

    /// Code of user `user` (1-based).
    LinearCode user_code(unsigned user) const;
};

/// Samples the shared matrix and the per-user dithers. The matrix is drawn
/// from stream `streams::code_matrix()`, dither i from
/// `streams::code_dither(i)`, all under `spec.seed`, so the same spec
/// always yields the same ensemble.
CodeEnsemble build_ensemble(const CodeEnsembleSpec& spec);

/// One standalone code (used for the relay's downlink broadcast): fresh
/// uniform g and dither under the given seed.
LinearCode sample_code(std::size_t k, std::size_t n, std::uint64_t seed);

/// (w * g) xor dither. Requires w.size() == code.k.
BitVec encode(const LinearCode& code, const BitVec& w);

/// The code whose codewords are the elementwise sums of the two inputs'
/// codewords: same g, dither = dither_i xor dither_j. The inputs must
/// share g (and hence k, n_prime).
LinearCode combined_code(const LinearCode& code_i, const LinearCode& code_j);

/// Exhaustive maximum-likelihood decoding over all 2^k messages for a BSC
/// with crossover probability rho: minimum Hamming distance for rho < 0.5,
/// maximum for rho > 0.5. At rho == 0.5 every message is equally likely
/// and the tie-break minimum (the all-zero message) is returned. Ties
/// always resolve to the lowest message in integer order, bit 0 least
/// significant.
///
/// Walks the messages in Gray-code order so each candidate codeword is one
/// row-XOR away from the previous one.
BitVec ml_decode(const LinearCode& code, const BitVec& y, double rho);

/// True iff all 2^k codewords of `code` are distinct (brute force; obeys
/// the same k cap as ml_decode). Noiseless experiments use this to flag
/// collision samples.
bool codewords_distinct(const LinearCode& code);

/// JSON artifact {"k":..,"n_prime":..,"g":[hex rows],"dithers":[hex]} for
/// experiment provenance.
std::string ensemble_to_json(const CodeEnsemble& ensemble);

}  // namespace mwrc

#endif  // MWRC_CODES_HPP
