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

// AVX2 kernels, 4 words (256 bits) per step. This translation unit is the
// only one compiled with -mavx2; callers reach it through the dispatch
// table after a CPUID probe.
//
// Vector popcount uses the nibble-lookup method: split each byte into two
// 4-bit halves, map both through a 16-entry bit-count table with PSHUFB,
// then horizontally sum the per-byte counts with PSADBW.

#include "mwrc/simd.hpp"

#if defined(MWRC_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

namespace mwrc::simd {

namespace {

inline __m256i popcount_bytes(__m256i v) {
    const __m256i lookup =
        _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                           _mm256_shuffle_epi8(lookup, hi));
}

// Sum of the four 64-bit lanes.
inline std::uint64_t hsum_epi64(__m256i v) {
    const __m128i lo = _mm256_castsi256_si128(v);
    const __m128i hi = _mm256_extracti128_si256(v, 1);
    const __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_extract_epi64(s, 0)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* a,
                    const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            _mm256_xor_si256(va, vb));
    }
    for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void xor_inplace_avx2(std::uint64_t* acc, const std::uint64_t* src, std::size_t n) {
    xor_words_avx2(acc, acc, src, n);
}

std::uint64_t popcount_words_avx2(const std::uint64_t* a, std::size_t n) {
    __m256i total = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        total = _mm256_add_epi64(
            total, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    std::uint64_t sum = hsum_epi64(total);
    for (; i < n; ++i) sum += std::popcount(a[i]);
    return sum;
}

std::uint64_t xor_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
    __m256i total = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i x = _mm256_xor_si256(va, vb);
        total = _mm256_add_epi64(
            total, _mm256_sad_epu8(popcount_bytes(x), _mm256_setzero_si256()));
    }
    std::uint64_t sum = hsum_epi64(total);
    for (; i < n; ++i) sum += std::popcount(a[i] ^ b[i]);
    return sum;
}

std::uint64_t xor_inplace_popcount_avx2(std::uint64_t* acc, const std::uint64_t* src,
                                        std::size_t n) {
    __m256i total = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
        const __m256i vs = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i x = _mm256_xor_si256(va, vs);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), x);
        total = _mm256_add_epi64(
            total, _mm256_sad_epu8(popcount_bytes(x), _mm256_setzero_si256()));
    }
    std::uint64_t sum = hsum_epi64(total);
    for (; i < n; ++i) {
        acc[i] ^= src[i];
        sum += std::popcount(acc[i]);
    }
    return sum;
}

}  // namespace

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& avx2_kernels() {
    static const KernelTable table{
        "avx2",
        &xor_words_avx2,
        &xor_inplace_avx2,
        &popcount_words_avx2,
        &xor_popcount_avx2,
        &xor_inplace_popcount_avx2,
    };
    return table;
}

}  // namespace mwrc::simd

#endif  // MWRC_HAVE_AVX2_KERNELS
