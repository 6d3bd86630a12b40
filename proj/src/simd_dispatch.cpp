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

#include "mwrc/simd.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mwrc::simd {

namespace {

const KernelTable* best_available() {
#if defined(MWRC_HAVE_AVX2_KERNELS)
    if (cpu_has_avx2()) return &avx2_kernels();
#endif
#if defined(MWRC_HAVE_NEON_KERNELS)
    return &neon_kernels();
#endif
    return &scalar_kernels();
}

const KernelTable* resolve(std::string_view name) {
    if (name == "auto" || name.empty()) return best_available();
    if (name == "scalar") return &scalar_kernels();
#if defined(MWRC_HAVE_AVX2_KERNELS)
    if (name == "avx2") {
        if (!cpu_has_avx2())
            throw std::runtime_error("MWRC_SIMD=avx2 but this CPU has no AVX2");
        return &avx2_kernels();
    }
#endif
#if defined(MWRC_HAVE_NEON_KERNELS)
    if (name == "neon") return &neon_kernels();
#endif
    throw std::runtime_error("unknown SIMD kernel set: " + std::string(name));
}

const KernelTable* resolve_from_env() {
    const char* env = std::getenv("MWRC_SIMD");
    return resolve(env ? std::string_view(env) : std::string_view("auto"));
}

std::atomic<const KernelTable*> g_active{nullptr};

}  // namespace

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = resolve_from_env();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void force(std::string_view name) {
    g_active.store(resolve(name), std::memory_order_release);
}

std::vector<const KernelTable*> available() {
    std::vector<const KernelTable*> out{&scalar_kernels()};
#if defined(MWRC_HAVE_AVX2_KERNELS)
    if (cpu_has_avx2()) out.push_back(&avx2_kernels());
#endif
#if defined(MWRC_HAVE_NEON_KERNELS)
    out.push_back(&neon_kernels());
#endif
    return out;
}

}  // namespace mwrc::simd
