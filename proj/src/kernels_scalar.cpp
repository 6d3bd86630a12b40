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

// Reference kernels. These define the semantics; the SIMD variants must be
// bit-for-bit equivalent (see tests/test_simd_kernels.cpp).

#include "mwrc/simd.hpp"

#include <bit>

namespace mwrc::simd {

namespace {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* a,
                      const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void xor_inplace_scalar(std::uint64_t* acc, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] ^= src[i];
}

std::uint64_t popcount_words_scalar(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

std::uint64_t xor_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b,
                                  std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
    return total;
}

std::uint64_t xor_inplace_popcount_scalar(std::uint64_t* acc, const std::uint64_t* src,
                                          std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc[i] ^= src[i];
        total += std::popcount(acc[i]);
    }
    return total;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{
        "scalar",
        &xor_words_scalar,
        &xor_inplace_scalar,
        &popcount_words_scalar,
        &xor_popcount_scalar,
        &xor_inplace_popcount_scalar,
    };
    return table;
}

}  // namespace mwrc::simd
