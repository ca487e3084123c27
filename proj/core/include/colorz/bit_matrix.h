// Copyright 2026 The colorz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COLORZ_BIT_MATRIX_H
#define COLORZ_BIT_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colorz {

inline constexpr size_t kDefaultEnumerationCap = 24;

/// Packed bit string over GF(2). Bits past `size()` in the last word are
/// always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t len);

    /// Parses a string of '0'/'1' characters, index 0 first.
    static BitVector from_string(std::string_view bits);

    size_t size() const { return len_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool value);
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    BitVector &operator^=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    bool operator==(const BitVector &other) const = default;

    size_t popcount() const;
    bool any() const;
    /// Parity of the bitwise AND, i.e. the GF(2) inner product.
    bool dot(const BitVector &other) const;

    std::string to_string() const;

   private:
    size_t len_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// One string of '0'/'1' per row.
    static BitMatrix from_rows(std::span<const std::string_view> rows);
    static BitMatrix from_columns(size_t rows, std::span<const BitVector> columns);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return stride_; }

    bool get(size_t r, size_t c) const { return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1; }
    void set(size_t r, size_t c, bool value);

    std::span<uint64_t> row_words(size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> row_words(size_t r) const { return {data_.data() + r * stride_, stride_}; }

    BitVector row(size_t r) const;
    BitVector column(size_t c) const;
    std::vector<BitVector> columns() const;

    /// rows[dst] ^= rows[src]
    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);

    BitMatrix transposed() const;
    /// Matrix-vector product m * t with t of length cols().
    BitVector multiply(const BitVector &t) const;
    bool operator==(const BitMatrix &other) const = default;

    std::string to_string() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Gauss-Jordan elimination in place, searching for pivots only among the
/// first `col_limit` columns. Returns the pivot column of each leading row;
/// the number of pivots is the rank of that column block.
std::vector<size_t> reduce_in_place(BitMatrix &m, size_t col_limit);

// The operations below never mutate their inputs; elimination runs on a copy.

size_t rank(const BitMatrix &m);

/// True iff m^T m = 0, i.e. every pair of columns, and every column with
/// itself, has even overlap.
bool is_self_orthogonal(const BitMatrix &m);

/// A maximal independent subset of the columns of m, kept in their original
/// order (rows() x rank). Columns are the input's own columns, so sparse
/// inputs give sparse bases.
BitMatrix column_space_basis(const BitMatrix &m);

/// Basis of {v : m v = 0}, one basis vector per column (cols() x (cols - rank)).
BitMatrix nullspace_basis(const BitMatrix &m);

/// Some t with m t = x, or nullopt when x is outside the column space.
std::optional<BitVector> solve_membership(const BitMatrix &m, const BitVector &x);

/// Walks every codeword of the span of `basis`'s columns in binary reflected
/// Gray code order: step i (1-based) toggles basis column ctz(i), so
/// successive codewords differ by exactly one basis vector. The first
/// codeword is 0.
class CodewordEnumerator {
   public:
    explicit CodewordEnumerator(const BitMatrix &basis, size_t cap = kDefaultEnumerationCap);

    size_t dimension() const { return basis_.size(); }
    uint64_t count() const { return uint64_t{1} << basis_.size(); }
    /// Index of the current codeword in enumeration order.
    uint64_t index() const { return step_; }

    const BitVector &current() const { return current_; }
    const BitVector &basis_vector(size_t i) const { return basis_[i]; }
    /// Basis index toggled by the most recent next(); nullopt before the first step.
    std::optional<size_t> last_flipped() const { return last_flipped_; }

    /// Advances to the next codeword. Returns false once all 2^k have been seen.
    bool next();

   private:
    std::vector<BitVector> basis_;
    BitVector current_;
    uint64_t step_ = 0;
    std::optional<size_t> last_flipped_;
};

}  // namespace colorz

#endif
