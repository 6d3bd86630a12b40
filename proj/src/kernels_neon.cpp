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

// NEON kernels, 2 words (128 bits) per step. Popcount is CNT over bytes
// followed by ADDV; a 128-bit vector holds at most 128 set bits, so the
// byte-wise horizontal sum cannot overflow.

#include "mwrc/simd.hpp"

#if defined(MWRC_HAVE_NEON_KERNELS)

#include <arm_neon.h>

#include <bit>

namespace mwrc::simd {

namespace {

inline const std::uint8_t* as_bytes(const std::uint64_t* p) {
    return reinterpret_cast<const std::uint8_t*>(p);
}
inline std::uint8_t* as_bytes(std::uint64_t* p) {
    return reinterpret_cast<std::uint8_t*>(p);
}

void xor_words_neon(std::uint64_t* dst, const std::uint64_t* a,
                    const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint8x16_t va = vld1q_u8(as_bytes(a + i));
        const uint8x16_t vb = vld1q_u8(as_bytes(b + i));
        vst1q_u8(as_bytes(dst + i), veorq_u8(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void xor_inplace_neon(std::uint64_t* acc, const std::uint64_t* src, std::size_t n) {
    xor_words_neon(acc, acc, src, n);
}

std::uint64_t popcount_words_neon(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint8x16_t v = vld1q_u8(as_bytes(a + i));
        total += vaddvq_u8(vcntq_u8(v));
    }
    for (; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

std::uint64_t xor_popcount_neon(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint8x16_t va = vld1q_u8(as_bytes(a + i));
        const uint8x16_t vb = vld1q_u8(as_bytes(b + i));
        total += vaddvq_u8(vcntq_u8(veorq_u8(va, vb)));
    }
    for (; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
    return total;
}

std::uint64_t xor_inplace_popcount_neon(std::uint64_t* acc, const std::uint64_t* src,
                                        std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const uint8x16_t va = vld1q_u8(as_bytes(acc + i));
        const uint8x16_t vs = vld1q_u8(as_bytes(src + i));
        const uint8x16_t x = veorq_u8(va, vs);
        vst1q_u8(as_bytes(acc + i), x);
        total += vaddvq_u8(vcntq_u8(x));
    }
    for (; i < n; ++i) {
        acc[i] ^= src[i];
        total += std::popcount(acc[i]);
    }
    return total;
}

}  // namespace

const KernelTable& neon_kernels() {
    static const KernelTable table{
        "neon",
        &xor_words_neon,
        &xor_inplace_neon,
        &popcount_words_neon,
        &xor_popcount_neon,
        &xor_inplace_popcount_neon,
    };
    return table;
}

}  // namespace mwrc::simd

#endif  // MWRC_HAVE_NEON_KERNELS
