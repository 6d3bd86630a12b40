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

#ifndef MWRC_SIMD_HPP
#define MWRC_SIMD_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mwrc::simd {

/// One set of word-level GF(2) kernels. All functions operate on packed
/// little-endian bit payloads (bit t of the vector = bit t%64 of word t/64).
/// Word counts are in 64-bit words; buffers may overlap only where noted.
struct KernelTable {
    const char* name;

    /// dst[i] = a[i] ^ b[i]
    void (*xor_words)(std::uint64_t* dst, const std::uint64_t* a,
                      const std::uint64_t* b, std::size_t n);

    /// acc[i] ^= src[i]
    void (*xor_inplace)(std::uint64_t* acc, const std::uint64_t* src, std::size_t n);

    /// sum of set bits over a[0..n)
    std::uint64_t (*popcount_words)(const std::uint64_t* a, std::size_t n);

    /// popcount(a ^ b) without materializing the xor
    std::uint64_t (*xor_popcount)(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n);

    /// acc ^= src, returns popcount of the updated acc. This is the inner
    /// step of the Gray-code codeword walk in the ML decoder.
    std::uint64_t (*xor_inplace_popcount)(std::uint64_t* acc, const std::uint64_t* src,
                                          std::size_t n);
};

/// Portable reference kernels (std::popcount on each word).
const KernelTable& scalar_kernels();

#if defined(MWRC_HAVE_AVX2_KERNELS)
const KernelTable& avx2_kernels();
bool cpu_has_avx2();
#endif

#if defined(MWRC_HAVE_NEON_KERNELS)
const KernelTable& neon_kernels();
#endif

/// Kernel set currently in use. Resolved on first call: the MWRC_SIMD
/// environment variable ("scalar", "avx2", "neon", "auto") wins, otherwise
/// the best variant the CPU supports.
const KernelTable& active();

/// Force a specific kernel set by name ("auto" re-probes). Throws
/// std::runtime_error for unknown names or variants this host cannot run.
/// Not safe to call while kernels are executing on other threads.
void force(std::string_view name);

/// Every kernel set usable on this host, scalar first. Equivalence tests
/// iterate this.
std::vector<const KernelTable*> available();

}  // namespace mwrc::simd

#endif  // MWRC_SIMD_HPP
