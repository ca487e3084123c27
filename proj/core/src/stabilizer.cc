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

#include "colorz/stabilizer.h"

#include <bit>
#include <cassert>

namespace colorz {

namespace {

/// Exponent of i (mod 4) picked up when multiplying the Paulis (x1, z1) and
/// (x2, z2) word by word: each qubit contributes -1, 0 or +1.
int product_phase(std::span<const uint64_t> x1, std::span<const uint64_t> z1, std::span<const uint64_t> x2,
                  std::span<const uint64_t> z2) {
    long total = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        uint64_t a = x1[w], b = z1[w], c = x2[w], d = z2[w];
        uint64_t y1 = a & b, xo = a & ~b, zo = ~a & b;
        uint64_t pos = (y1 & d & ~c) | (xo & d & c) | (zo & c & ~d);
        uint64_t neg = (y1 & c & ~d) | (xo & d & ~c) | (zo & c & d);
        total += std::popcount(pos);
        total -= std::popcount(neg);
    }
    return static_cast<int>(((total % 4) + 4) % 4);
}

bool symplectic(std::span<const uint64_t> x1, std::span<const uint64_t> z1, std::span<const uint64_t> x2,
                std::span<const uint64_t> z2) {
    uint64_t acc = 0;
    for (size_t w = 0; w < x1.size(); w++) {
        acc ^= (x1[w] & z2[w]) ^ (z1[w] & x2[w]);
    }
    return std::popcount(acc) & 1;
}

}  // namespace

Tableau Tableau::zero_state(size_t n) {
    Tableau t;
    t.n_ = n;
    t.xs_ = BitMatrix(2 * n, n);
    t.zs_ = BitMatrix(2 * n, n);
    t.signs_.assign(2 * n, 0);
    for (size_t q = 0; q < n; q++) {
        t.xs_.set(q, q, true);
        t.zs_.set(n + q, q, true);
    }
    return t;
}

Tableau Tableau::from_stabilizers(const BitMatrix &xs, const BitMatrix &zs, const std::vector<bool> &signs) {
    const size_t n = xs.cols();
    if (xs.rows() != n || zs.rows() != n || zs.cols() != n || signs.size() != n) {
        throw std::invalid_argument("Tableau::from_stabilizers: need n generators on n qubits");
    }
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (symplectic(xs.row_words(i), zs.row_words(i), xs.row_words(j), zs.row_words(j))) {
                throw std::invalid_argument("Tableau::from_stabilizers: generators " + std::to_string(i) + " and " +
                                            std::to_string(j) + " anticommute");
            }
        }
    }

    // Destabilizer d_i solves <d_i, s_j> = delta_ij. With d = (dx | dz) the
    // symplectic product with s_j is dx.s_j.z + dz.s_j.x, so row j of the
    // system is (s_j.z | s_j.x), augmented with the identity.
    BitMatrix system(n, 3 * n);
    for (size_t j = 0; j < n; j++) {
        for (size_t q = 0; q < n; q++) {
            if (zs.get(j, q)) {
                system.set(j, q, true);
            }
            if (xs.get(j, q)) {
                system.set(j, n + q, true);
            }
        }
        system.set(j, 2 * n + j, true);
    }
    std::vector<size_t> pivots = reduce_in_place(system, 2 * n);
    if (pivots.size() != n) {
        throw std::invalid_argument("Tableau::from_stabilizers: generators are not independent");
    }

    Tableau t;
    t.n_ = n;
    t.xs_ = BitMatrix(2 * n, n);
    t.zs_ = BitMatrix(2 * n, n);
    t.signs_.assign(2 * n, 0);
    for (size_t i = 0; i < n; i++) {
        for (size_t r = 0; r < n; r++) {
            if (!system.get(r, 2 * n + i)) {
                continue;
            }
            size_t p = pivots[r];
            if (p < n) {
                t.xs_.set(i, p, true);
            } else {
                t.zs_.set(i, p - n, true);
            }
        }
        auto sx = xs.row_words(i);
        auto sz = zs.row_words(i);
        std::copy(sx.begin(), sx.end(), t.xs_.row_words(n + i).begin());
        std::copy(sz.begin(), sz.end(), t.zs_.row_words(n + i).begin());
        t.signs_[n + i] = signs[i] ? 1 : 0;
    }
    // Multiplying d_k by s_i leaves every <d_k, s_j> unchanged and toggles
    // <d_i, d_k>, so destabilizers can be made to commute pairwise in order.
    for (size_t i = 0; i < n; i++) {
        for (size_t k = i + 1; k < n; k++) {
            if (symplectic(t.xs_.row_words(i), t.zs_.row_words(i), t.xs_.row_words(k), t.zs_.row_words(k))) {
                t.xs_.xor_row_into(n + i, k);
                t.zs_.xor_row_into(n + i, k);
            }
        }
    }
    return t;
}

std::string Tableau::stabilizer_string(size_t i) const {
    std::string s = signs_[n_ + i] ? "-" : "+";
    for (size_t q = 0; q < n_; q++) {
        bool x = xs_.get(n_ + i, q);
        bool z = zs_.get(n_ + i, q);
        s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : '_');
    }
    return s;
}

void Tableau::apply(Gate gate, size_t qubit) {
    if (qubit >= n_) {
        throw std::out_of_range("Tableau::apply: qubit " + std::to_string(qubit) + " out of range");
    }
    const size_t w = qubit >> 6;
    const uint64_t mask = uint64_t{1} << (qubit & 63);
    for (size_t r = 0; r < 2 * n_; r++) {
        uint64_t &xw = xs_.row_words(r)[w];
        uint64_t &zw = zs_.row_words(r)[w];
        bool x = xw & mask;
        bool z = zw & mask;
        switch (gate) {
            case Gate::kH:
                signs_[r] ^= (x && z);
                xw = z ? (xw | mask) : (xw & ~mask);
                zw = x ? (zw | mask) : (zw & ~mask);
                break;
            case Gate::kP:
                signs_[r] ^= (x && z);
                if (x) {
                    zw ^= mask;
                }
                break;
            case Gate::kZ:
                signs_[r] ^= x;
                break;
            case Gate::kHP: {
                // P: (x, z) -> (x, x ^ z), then H: swap.
                signs_[r] ^= (x && z);
                bool z1 = x != z;
                signs_[r] ^= (x && z1);
                xw = z1 ? (xw | mask) : (xw & ~mask);
                zw = x ? (zw | mask) : (zw & ~mask);
                break;
            }
        }
    }
}

void Tableau::rowsum(size_t h, size_t i) {
    int phase = 2 * signs_[h] + 2 * signs_[i] +
                product_phase(xs_.row_words(i), zs_.row_words(i), xs_.row_words(h), zs_.row_words(h));
    signs_[h] = static_cast<uint8_t>((phase % 4) == 2);
    xs_.xor_row_into(i, h);
    zs_.xor_row_into(i, h);
}

template <typename CoinFn>
bool Tableau::measure_impl(size_t qubit, CoinFn &&coin) {
    if (qubit >= n_) {
        throw std::out_of_range("Tableau::measure_z: qubit " + std::to_string(qubit) + " out of range");
    }
    const size_t w = qubit >> 6;
    const uint64_t mask = uint64_t{1} << (qubit & 63);
    size_t pivot = 2 * n_;
    for (size_t r = n_; r < 2 * n_; r++) {
        if (xs_.row_words(r)[w] & mask) {
            pivot = r;
            break;
        }
    }
    if (pivot < 2 * n_) {
        for (size_t r = 0; r < 2 * n_; r++) {
            if (r != pivot && (xs_.row_words(r)[w] & mask)) {
                rowsum(r, pivot);
            }
        }
        size_t d = pivot - n_;
        auto px = xs_.row_words(pivot);
        auto pz = zs_.row_words(pivot);
        std::copy(px.begin(), px.end(), xs_.row_words(d).begin());
        std::copy(pz.begin(), pz.end(), zs_.row_words(d).begin());
        signs_[d] = signs_[pivot];
        std::fill(px.begin(), px.end(), 0);
        std::fill(pz.begin(), pz.end(), 0);
        pz[w] = mask;
        bool outcome = coin();
        signs_[pivot] = outcome;
        return outcome;
    }

    // Deterministic: Z_q is (up to sign) the product of the stabilizers
    // whose destabilizers anticommute with it.
    const size_t stride = xs_.words_per_row();
    std::vector<uint64_t> sx(stride, 0), sz(stride, 0);
    int sign = 0;
    for (size_t d = 0; d < n_; d++) {
        if (!(xs_.row_words(d)[w] & mask)) {
            continue;
        }
        size_t r = n_ + d;
        int phase = 2 * sign + 2 * signs_[r] + product_phase(xs_.row_words(r), zs_.row_words(r), sx, sz);
        sign = (phase % 4) == 2;
        auto rx = xs_.row_words(r);
        auto rz = zs_.row_words(r);
        for (size_t k = 0; k < stride; k++) {
            sx[k] ^= rx[k];
            sz[k] ^= rz[k];
        }
    }
    return sign != 0;
}

bool Tableau::measure_z(size_t qubit, Rng &rng) {
    return measure_impl(qubit, [&rng] { return (rng() >> 63) != 0; });
}

bool Tableau::measure_z_forced(size_t qubit, bool outcome_if_random) {
    return measure_impl(qubit, [outcome_if_random] { return outcome_if_random; });
}

std::optional<bool> Tableau::group_sign(const BitVector &x, const BitVector &z) const {
    if (x.size() != n_ || z.size() != n_) {
        throw std::invalid_argument("Tableau::group_sign: length mismatch");
    }
    for (size_t r = n_; r < 2 * n_; r++) {
        if (symplectic(x.words(), z.words(), xs_.row_words(r), zs_.row_words(r))) {
            return std::nullopt;
        }
    }
    const size_t stride = xs_.words_per_row();
    std::vector<uint64_t> px(stride, 0), pz(stride, 0);
    int sign = 0;
    for (size_t d = 0; d < n_; d++) {
        if (!symplectic(x.words(), z.words(), xs_.row_words(d), zs_.row_words(d))) {
            continue;
        }
        size_t r = n_ + d;
        int phase = 2 * sign + 2 * signs_[r] + product_phase(xs_.row_words(r), zs_.row_words(r), px, pz);
        sign = (phase % 4) == 2;
        for (size_t k = 0; k < stride; k++) {
            px[k] ^= xs_.row_words(r)[k];
            pz[k] ^= zs_.row_words(r)[k];
        }
    }
    for (size_t k = 0; k < stride; k++) {
        if (px[k] != x.words()[k] || pz[k] != z.words()[k]) {
            return std::nullopt;
        }
    }
    return sign != 0;
}

bool Tableau::check_invariants() const {
    for (size_t i = 0; i < 2 * n_; i++) {
        for (size_t j = i + 1; j < 2 * n_; j++) {
            bool anti = symplectic(xs_.row_words(i), zs_.row_words(i), xs_.row_words(j), zs_.row_words(j));
            bool expected = (j == i + n_);
            if (anti != expected) {
                return false;
            }
        }
    }
    BitMatrix stab(n_, 2 * n_);
    for (size_t i = 0; i < n_; i++) {
        for (size_t q = 0; q < n_; q++) {
            stab.set(i, q, xs_.get(n_ + i, q));
            stab.set(i, n_ + q, zs_.get(n_ + i, q));
        }
    }
    return rank(stab) == n_;
}

Tableau css_tableau(const BitMatrix &b) {
    if (!is_self_orthogonal(b)) {
        throw NotSelfOrthogonalError("css_tableau: B^T B != 0, the X and Z generators would not commute");
    }
    const size_t n = b.rows();
    BitMatrix code = column_space_basis(b);
    BitMatrix dual = nullspace_basis(b.transposed());
    BitMatrix xs(n, n), zs(n, n);
    size_t row = 0;
    for (const BitVector &u : code.columns()) {
        std::copy(u.words().begin(), u.words().end(), xs.row_words(row).begin());
        row++;
    }
    for (const BitVector &v : dual.columns()) {
        std::copy(v.words().begin(), v.words().end(), zs.row_words(row).begin());
        row++;
    }
    Tableau t = Tableau::from_stabilizers(xs, zs, std::vector<bool>(n, false));
    assert(t.check_invariants());
    return t;
}

Tableau apply_clifford(Tableau t, size_t qubit, Gate gate) {
    t.apply(gate, qubit);
    return t;
}

BitVector sample_basis(const Tableau &t, Rng &rng) {
    Tableau work = t;
    BitVector x(t.qubit_count());
    for (size_t q = 0; q < t.qubit_count(); q++) {
        if (work.measure_z(q, rng)) {
            x.set(q, true);
        }
    }
    return x;
}

CompiledSampler::CompiledSampler(const Tableau &t) : anchor_(t.qubit_count()) {
    const size_t n = t.qubit_count();
    Tableau work = t;
    for (size_t q = 0; q < n; q++) {
        if (work.measure_z_forced(q, false)) {
            anchor_.set(q, true);
        }
    }
    BitMatrix xparts(n, n);
    for (size_t i = 0; i < n; i++) {
        BitVector x = t.stabilizer_x(i);
        std::copy(x.words().begin(), x.words().end(), xparts.row_words(i).begin());
    }
    size_t r = reduce_in_place(xparts, n).size();
    for (size_t i = 0; i < r; i++) {
        span_.push_back(xparts.row(i));
    }
}

BitVector CompiledSampler::sample(Rng &rng) const {
    BitVector x = anchor_;
    uint64_t bits = 0;
    for (size_t i = 0; i < span_.size(); i++) {
        if ((i & 63) == 0) {
            bits = rng();
        }
        if ((bits >> (i & 63)) & 1) {
            x ^= span_[i];
        }
    }
    return x;
}

}  // namespace colorz
