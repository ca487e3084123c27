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

#include "colorz/bit_matrix.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "colorz/errors.h"

namespace colorz {

namespace {

size_t words_for(size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("BitVector::from_string: expected '0' or '1'");
        }
    }
    return v;
}

void BitVector::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector: length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

size_t BitVector::popcount() const {
    size_t n = 0;
    for (uint64_t w : words_) {
        n += std::popcount(w);
    }
    return n;
}

bool BitVector::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVector::dot(const BitVector &other) const {
    if (other.len_ != len_) {
        throw std::invalid_argument("BitVector::dot: length mismatch");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const std::string_view> rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
        }
        for (size_t c = 0; c < cols; c++) {
            if (rows[r][c] == '1') {
                m.set(r, c, true);
            } else if (rows[r][c] != '0') {
                throw std::invalid_argument("BitMatrix::from_rows: expected '0' or '1'");
            }
        }
    }
    return m;
}

BitMatrix BitMatrix::from_columns(size_t rows, std::span<const BitVector> columns) {
    BitMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("BitMatrix::from_columns: column length mismatch");
        }
        for (size_t r = 0; r < rows; r++) {
            if (columns[c].get(r)) {
                m.set(r, c, true);
            }
        }
    }
    return m;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    uint64_t &w = data_[r * stride_ + (c >> 6)];
    uint64_t mask = uint64_t{1} << (c & 63);
    w = value ? (w | mask) : (w & ~mask);
}

BitVector BitMatrix::row(size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

std::vector<BitVector> BitMatrix::columns() const {
    BitMatrix t = transposed();
    std::vector<BitVector> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; c++) {
        out.push_back(t.row(c));
    }
    return out;
}

void BitMatrix::xor_row_into(size_t src, size_t dst) {
    const uint64_t *s = data_.data() + src * stride_;
    uint64_t *d = data_.data() + dst * stride_;
    for (size_t w = 0; w < stride_; w++) {
        d[w] ^= s[w];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    uint64_t *pa = data_.data() + a * stride_;
    uint64_t *pb = data_.data() + b * stride_;
    std::swap_ranges(pa, pa + stride_, pb);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        auto words = row_words(r);
        for (size_t w = 0; w < stride_; w++) {
            uint64_t bits = words[w];
            while (bits) {
                size_t c = w * 64 + std::countr_zero(bits);
                t.set(c, r, true);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BitVector BitMatrix::multiply(const BitVector &t) const {
    if (t.size() != cols_) {
        throw std::invalid_argument("BitMatrix::multiply: length mismatch");
    }
    BitVector out(rows_);
    auto tw = t.words();
    for (size_t r = 0; r < rows_; r++) {
        auto words = row_words(r);
        uint64_t acc = 0;
        for (size_t w = 0; w < stride_; w++) {
            acc ^= words[w] & tw[w];
        }
        if (std::popcount(acc) & 1) {
            out.set(r, true);
        }
    }
    return out;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            s += get(r, c) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

std::vector<size_t> reduce_in_place(BitMatrix &m, size_t col_limit) {
    std::vector<size_t> pivots;
    size_t next_row = 0;
    for (size_t c = 0; c < col_limit && next_row < m.rows(); c++) {
        size_t word = c >> 6;
        uint64_t mask = uint64_t{1} << (c & 63);
        size_t pivot = m.rows();
        for (size_t r = next_row; r < m.rows(); r++) {
            if (m.row_words(r)[word] & mask) {
                pivot = r;
                break;
            }
        }
        if (pivot == m.rows()) {
            continue;
        }
        m.swap_rows(pivot, next_row);
        for (size_t r = 0; r < m.rows(); r++) {
            if (r != next_row && (m.row_words(r)[word] & mask)) {
                m.xor_row_into(next_row, r);
            }
        }
        pivots.push_back(c);
        next_row++;
    }
    return pivots;
}

size_t rank(const BitMatrix &m) {
    BitMatrix work = m;
    return reduce_in_place(work, work.cols()).size();
}

bool is_self_orthogonal(const BitMatrix &m) {
    BitMatrix t = m.transposed();
    for (size_t i = 0; i < t.rows(); i++) {
        auto a = t.row_words(i);
        for (size_t j = i; j < t.rows(); j++) {
            auto b = t.row_words(j);
            uint64_t acc = 0;
            for (size_t w = 0; w < t.words_per_row(); w++) {
                acc ^= a[w] & b[w];
            }
            if (std::popcount(acc) & 1) {
                return false;
            }
        }
    }
    return true;
}

BitMatrix column_space_basis(const BitMatrix &m) {
    // Columns become rows; each is reduced against the echelon rows kept so
    // far and admitted when a nonzero remainder survives.
    BitMatrix t = m.transposed();
    BitMatrix echelon(t.rows(), t.cols());
    std::vector<size_t> echelon_pivot;
    std::vector<size_t> chosen;
    size_t stride = t.words_per_row();
    std::vector<uint64_t> scratch(stride);
    for (size_t c = 0; c < t.rows(); c++) {
        auto src = t.row_words(c);
        std::copy(src.begin(), src.end(), scratch.begin());
        for (size_t k = 0; k < echelon_pivot.size(); k++) {
            size_t p = echelon_pivot[k];
            if ((scratch[p >> 6] >> (p & 63)) & 1) {
                auto e = echelon.row_words(k);
                for (size_t w = 0; w < stride; w++) {
                    scratch[w] ^= e[w];
                }
            }
        }
        size_t lead = t.cols();
        for (size_t w = 0; w < stride; w++) {
            if (scratch[w]) {
                lead = w * 64 + std::countr_zero(scratch[w]);
                break;
            }
        }
        if (lead == t.cols()) {
            continue;
        }
        auto dst = echelon.row_words(echelon_pivot.size());
        std::copy(scratch.begin(), scratch.end(), dst.begin());
        echelon_pivot.push_back(lead);
        chosen.push_back(c);
    }
    BitMatrix out(m.rows(), chosen.size());
    for (size_t k = 0; k < chosen.size(); k++) {
        for (size_t r = 0; r < m.rows(); r++) {
            if (m.get(r, chosen[k])) {
                out.set(r, k, true);
            }
        }
    }
    return out;
}

BitMatrix nullspace_basis(const BitMatrix &m) {
    BitMatrix work = m;
    std::vector<size_t> pivots = reduce_in_place(work, work.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    BitMatrix out(m.cols(), m.cols() - pivots.size());
    size_t k = 0;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        out.set(f, k, true);
        for (size_t i = 0; i < pivots.size(); i++) {
            if (work.get(i, f)) {
                out.set(pivots[i], k, true);
            }
        }
        k++;
    }
    return out;
}

std::optional<BitVector> solve_membership(const BitMatrix &m, const BitVector &x) {
    if (x.size() != m.rows()) {
        throw std::invalid_argument("solve_membership: x.len must equal m.rows");
    }
    size_t n = m.cols();
    BitMatrix aug(m.rows(), n + 1);
    for (size_t r = 0; r < m.rows(); r++) {
        auto src = m.row_words(r);
        auto dst = aug.row_words(r);
        std::copy(src.begin(), src.end(), dst.begin());
        if (x.get(r)) {
            aug.set(r, n, true);
        }
    }
    std::vector<size_t> pivots = reduce_in_place(aug, n);
    for (size_t r = pivots.size(); r < aug.rows(); r++) {
        if (aug.get(r, n)) {
            return std::nullopt;
        }
    }
    BitVector t(n);
    for (size_t i = 0; i < pivots.size(); i++) {
        if (aug.get(i, n)) {
            t.set(pivots[i], true);
        }
    }
    return t;
}

CodewordEnumerator::CodewordEnumerator(const BitMatrix &basis, size_t cap) : current_(basis.rows()) {
    if (basis.cols() > cap) {
        throw CapExceededError("codeword enumeration: basis has " + std::to_string(basis.cols()) +
                               " vectors, cap is " + std::to_string(cap));
    }
    if (basis.cols() >= 64) {
        throw CapExceededError("codeword enumeration: basis dimension must be below 64");
    }
    basis_ = basis.columns();
}

bool CodewordEnumerator::next() {
    if (step_ + 1 >= count()) {
        return false;
    }
    step_++;
    size_t k = std::countr_zero(step_);
    current_ ^= basis_[k];
    last_flipped_ = k;
    return true;
}

}  // namespace colorz
