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

#include "mwrc/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "mwrc/simd.hpp"

namespace mwrc {

LinearCode CodeEnsemble::user_code(unsigned user) const {
    if (user < 1 || user > dithers.size())
        throw std::invalid_argument("CodeEnsemble::user_code: user index out of range");
    return LinearCode{k(), n_prime(), g, dithers[user - 1]};
}

CodeEnsemble build_ensemble(const CodeEnsembleSpec& spec) {
    if (spec.k < 1 || spec.n_prime < 1)
        throw std::invalid_argument("build_ensemble: k and n_prime must be >= 1");
    if (spec.users < 2)
        throw std::invalid_argument("build_ensemble: need at least 2 users");

    CodeEnsemble ensemble;
    ensemble.g = BitMatrix(spec.k, spec.n_prime);
    NoiseSource g_src(spec.seed, streams::code_matrix());
    for (std::size_t r = 0; r < spec.k; ++r)
        ensemble.g.set_row(r, g_src.uniform(spec.n_prime));

    ensemble.dithers.reserve(spec.users);
    for (unsigned u = 1; u <= spec.users; ++u) {
        NoiseSource q_src(spec.seed, streams::code_dither(u));
        ensemble.dithers.push_back(q_src.uniform(spec.n_prime));
    }
    return ensemble;
}

LinearCode sample_code(std::size_t k, std::size_t n, std::uint64_t seed) {
    if (k < 1 || n < 1)
        throw std::invalid_argument("sample_code: k and n must be >= 1");
    LinearCode code;
    code.k = k;
    code.n_prime = n;
    code.g = BitMatrix(k, n);
    NoiseSource g_src(seed, streams::code_matrix());
    for (std::size_t r = 0; r < k; ++r) code.g.set_row(r, g_src.uniform(n));
    NoiseSource q_src(seed, streams::code_dither(0));
    code.dither = q_src.uniform(n);
    return code;
}

BitVec encode(const LinearCode& code, const BitVec& w) {
    if (w.size() != code.k)
        throw std::invalid_argument("encode: message length != k");
    return vec_mat_mul(w, code.g) ^ code.dither;
}

LinearCode combined_code(const LinearCode& code_i, const LinearCode& code_j) {
    if (code_i.g != code_j.g)
        throw std::invalid_argument("combined_code: codes do not share a generator");
    return LinearCode{code_i.k, code_i.n_prime, code_i.g,
                      code_i.dither ^ code_j.dither};
}

BitVec ml_decode(const LinearCode& code, const BitVec& y, double rho) {
    if (code.k > kMaxMessageBits)
        throw std::invalid_argument("ml_decode: k exceeds the exhaustive-search cap");
    if (y.size() != code.n_prime)
        throw std::invalid_argument("ml_decode: received length != n_prime");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("ml_decode: rho must lie in [0, 1]");
    // Degenerate channel: all messages are equally likely, so the
    // tie-break minimum wins outright.
    if (rho == 0.5) return BitVec(code.k);

    const bool minimize = rho < 0.5;
    const std::size_t nw = code.g.words_per_row();
    const auto& kern = simd::active();

    // acc = codeword(current message) xor y, maintained along a Gray-code
    // walk; its popcount is the Hamming distance to y.
    BitVec acc = encode(code, BitVec(code.k)) ^ y;
    std::uint64_t* acc_words = acc.mutable_words().data();

    std::uint64_t best_dist = kern.popcount_words(acc_words, nw);
    std::uint64_t best_msg = 0;

    const std::uint64_t count = std::uint64_t{1} << code.k;
    for (std::uint64_t m = 1; m < count; ++m) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(m));
        const std::uint64_t dist =
            kern.xor_inplace_popcount(acc_words, code.g.row_words(flip).data(), nw);
        const std::uint64_t msg = m ^ (m >> 1);  // message at this walk step
        const bool better = minimize ? dist < best_dist : dist > best_dist;
        if (better || (dist == best_dist && msg < best_msg)) {
            best_dist = dist;
            best_msg = msg;
        }
    }
    return BitVec::from_u64(best_msg, code.k);
}

bool codewords_distinct(const LinearCode& code) {
    if (code.k > kMaxMessageBits)
        throw std::invalid_argument("codewords_distinct: k exceeds the search cap");
    // Injectivity of w -> (w*g) xor q is injectivity of w -> w*g, so the
    // dither can be ignored.
    std::vector<BitVec> words;
    words.reserve(std::size_t{1} << code.k);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << code.k); ++m)
        words.push_back(vec_mat_mul(BitVec::from_u64(m, code.k), code.g));
    std::sort(words.begin(), words.end(), [](const BitVec& a, const BitVec& b) {
        const auto wa = a.words(), wb = b.words();
        return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
    });
    return std::adjacent_find(words.begin(), words.end()) == words.end();
}

std::string ensemble_to_json(const CodeEnsemble& ensemble) {
    nlohmann::json j;
    j["k"] = ensemble.k();
    j["n_prime"] = ensemble.n_prime();
    std::vector<std::string> rows;
    rows.reserve(ensemble.k());
    for (std::size_t r = 0; r < ensemble.k(); ++r)
        rows.push_back(ensemble.g.row(r).to_hex());
    j["g"] = rows;
    std::vector<std::string> dithers;
    dithers.reserve(ensemble.dithers.size());
    for (const BitVec& d : ensemble.dithers) dithers.push_back(d.to_hex());
    j["dithers"] = dithers;
    return j.dump(2);
}

}  // namespace mwrc
