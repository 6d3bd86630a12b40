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

#include "mwrc/gf2.hpp"

#include <bit>
#include <stdexcept>

#include "mwrc/simd.hpp"

namespace mwrc {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// All-ones below bit `bits_in_last` (0 means a full word).
std::uint64_t tail_mask(std::size_t len) {
    const std::size_t rem = len % kWordBits;
    return rem == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << rem) - 1);
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitVec::BitVec(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVec BitVec::from_bits(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t t = 0; t < bits.size(); ++t) {
        if (bits[t] == '1') {
            v.words_[t / kWordBits] |= std::uint64_t{1} << (t % kWordBits);
        } else if (bits[t] != '0') {
            throw std::invalid_argument("BitVec::from_bits: expected only '0'/'1'");
        }
    }
    return v;
}

BitVec BitVec::from_u64(std::uint64_t value, std::size_t len) {
    if (len > 64) throw std::invalid_argument("BitVec::from_u64: len > 64");
    BitVec v(len);
    if (len > 0) v.words_[0] = value & tail_mask(len);
    return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t len) {
    const std::size_t nbytes = (len + 7) / 8;
    if (hex.size() != 2 * nbytes)
        throw std::invalid_argument("BitVec::from_hex: hex length does not match len");
    BitVec v(len);
    for (std::size_t j = 0; j < nbytes; ++j) {
        const int hi = hex_digit(hex[2 * j]);
        const int lo = hex_digit(hex[2 * j + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("BitVec::from_hex: invalid hex digit");
        const std::uint64_t byte = static_cast<std::uint64_t>(hi << 4 | lo);
        v.words_[j / 8] |= byte << (8 * (j % 8));
    }
    // Serialized payloads must already be canonical.
    if (!v.words_.empty() && (v.words_.back() & ~tail_mask(len)) != 0)
        throw std::invalid_argument("BitVec::from_hex: nonzero padding bits");
    return v;
}

bool BitVec::get(std::size_t t) const {
    if (t >= len_) throw std::out_of_range("BitVec::get: index out of range");
    return (words_[t / kWordBits] >> (t % kWordBits)) & 1;
}

void BitVec::set(std::size_t t, bool value) {
    if (t >= len_) throw std::out_of_range("BitVec::set: index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (t % kWordBits);
    if (value)
        words_[t / kWordBits] |= bit;
    else
        words_[t / kWordBits] &= ~bit;
}

std::size_t BitVec::popcount() const noexcept {
    return simd::active().popcount_words(words_.data(), words_.size());
}

std::uint64_t BitVec::to_u64() const {
    if (len_ > 64) throw std::invalid_argument("BitVec::to_u64: size() > 64");
    return words_.empty() ? 0 : words_[0];
}

std::string BitVec::to_bit_string() const {
    std::string s(len_, '0');
    for (std::size_t t = 0; t < len_; ++t)
        if (get(t)) s[t] = '1';
    return s;
}

std::string BitVec::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::size_t nbytes = (len_ + 7) / 8;
    std::string s(2 * nbytes, '0');
    for (std::size_t j = 0; j < nbytes; ++j) {
        const auto byte =
            static_cast<unsigned>((words_[j / 8] >> (8 * (j % 8))) & 0xff);
        s[2 * j] = digits[byte >> 4];
        s[2 * j + 1] = digits[byte & 0xf];
    }
    return s;
}

void BitVec::mask_padding() noexcept {
    if (!words_.empty()) words_.back() &= tail_mask(len_);
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (len_ != other.len_)
        throw std::invalid_argument("BitVec xor: length mismatch");
    simd::active().xor_inplace(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVec operator^(const BitVec& a, const BitVec& b) {
    if (a.len_ != b.len_)
        throw std::invalid_argument("BitVec xor: length mismatch");
    BitVec out(a.len_);
    simd::active().xor_words(out.words_.data(), a.words_.data(), b.words_.data(),
                             out.words_.size());
    return out;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), words_(rows * wpr_, 0) {}

bool BitMatrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("BitMatrix::get: index out of range");
    return (words_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("BitMatrix::set: index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
    if (value)
        words_[r * wpr_ + c / kWordBits] |= bit;
    else
        words_[r * wpr_ + c / kWordBits] &= ~bit;
}

std::span<const std::uint64_t> BitMatrix::row_words(std::size_t r) const {
    if (r >= rows_) throw std::out_of_range("BitMatrix::row_words: row out of range");
    return {words_.data() + r * wpr_, wpr_};
}

BitVec BitMatrix::row(std::size_t r) const {
    const auto src = row_words(r);
    BitVec v(cols_);
    auto dst = v.mutable_words();
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (r >= rows_) throw std::out_of_range("BitMatrix::set_row: row out of range");
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    const auto src = v.words();
    for (std::size_t i = 0; i < wpr_; ++i) words_[r * wpr_ + i] = src[i];
}

BitVec gf2_xor(const BitVec& a, const BitVec& b) { return a ^ b; }

BitVec vec_mat_mul(const BitVec& w, const BitMatrix& g) {
    if (w.size() != g.rows())
        throw std::invalid_argument("vec_mat_mul: w.size() != g.rows()");
    BitVec acc(g.cols());
    auto out = acc.mutable_words();
    const auto& kern = simd::active();
    const auto sel = w.words();
    for (std::size_t wi = 0; wi < sel.size(); ++wi) {
        std::uint64_t bits = sel[wi];
        while (bits) {
            const std::size_t r = wi * kWordBits +
                                  static_cast<std::size_t>(std::countr_zero(bits));
            kern.xor_inplace(out.data(), g.row_words(r).data(), g.words_per_row());
            bits &= bits - 1;
        }
    }
    return acc;
}

std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    return static_cast<std::size_t>(simd::active().xor_popcount(
        a.words().data(), b.words().data(), a.words().size()));
}

}  // namespace mwrc
