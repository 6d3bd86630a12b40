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

#ifndef MWRC_GF2_HPP
#define MWRC_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mwrc {

/// Packed binary row vector over GF(2).
///
/// Bit t lives in bit (t mod 64) of word (t / 64); equivalently, bit
/// (t mod 8) of byte (t / 8), least-significant bit first. That byte-level
/// convention is what hex serialization emits. Padding bits beyond size()
/// are kept zero after every operation, so equality is plain payload
/// equality. Zero-length vectors are legal and act as identities.
///
/// Instances are cheap values; all operators return new vectors except the
/// compound assignments. Immutable sharing across threads is safe.
class BitVec {
  public:
    BitVec() = default;

    /// All-zero vector of the given bit count.
    explicit BitVec(std::size_t len);

    /// Parse "0110"-style strings, index 0 first.
    static BitVec from_bits(std::string_view bits);

    /// Low `len` bits of `value`, bit 0 least significant. len <= 64.
    static BitVec from_u64(std::uint64_t value, std::size_t len);

    /// Inverse of to_hex(); `len` is carried separately by the caller.
    /// Rejects strings of the wrong length and nonzero padding bits.
    static BitVec from_hex(std::string_view hex, std::size_t len);

    std::size_t size() const noexcept { return len_; }
    bool empty() const noexcept { return len_ == 0; }

    bool get(std::size_t t) const;
    void set(std::size_t t, bool value);

    /// Number of set bits.
    std::size_t popcount() const noexcept;

    bool all_zero() const noexcept { return popcount() == 0; }

    /// Integer view, bit 0 least significant. Requires size() <= 64.
    std::uint64_t to_u64() const;

    std::string to_bit_string() const;

    /// Payload bytes in order, two lowercase hex digits each.
    std::string to_hex() const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(const BitVec& a, const BitVec& b);

    friend bool operator==(const BitVec&, const BitVec&) = default;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> mutable_words() noexcept { return words_; }

    /// Zero the padding bits above size(). Callers that write whole words
    /// through mutable_words() must call this to restore canonical form.
    void mask_padding() noexcept;

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// k x n binary matrix, row-major, each row an independently packed BitVec
/// payload (rows start on word boundaries).
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return wpr_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    std::span<const std::uint64_t> row_words(std::size_t r) const;
    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t wpr_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Elementwise modulo-2 sum. Lengths must match.
BitVec gf2_xor(const BitVec& a, const BitVec& b);

/// w * g over GF(2): XOR of the rows of g selected by the set bits of w.
/// Requires w.size() == g.rows(); result has g.cols() bits.
BitVec vec_mat_mul(const BitVec& w, const BitMatrix& g);

/// Number of differing positions. Lengths must match.
std::size_t hamming_distance(const BitVec& a, const BitVec& b);

}  // namespace mwrc

#endif  // MWRC_GF2_HPP
