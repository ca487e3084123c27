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

#ifndef COLORZ_STABILIZER_H
#define COLORZ_STABILIZER_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "colorz/bit_matrix.h"
#include "colorz/random.h"

namespace colorz {

struct NotSelfOrthogonalError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Single-qubit Cliffords used by the estimator. kHP is the operator H*P,
/// i.e. P acts first.
enum class Gate { kH, kP, kZ, kHP };

/// Stabilizer state on n qubits in destabilizer form: rows [0, n) are
/// destabilizers, rows [n, 2n) are the n stabilizer generators.
///
/// Paulis use the x/z bit convention where x=z=1 means Y, so every row is
/// Hermitian and its phase is a single sign bit. The i factors that P
/// introduces are absorbed into the Y encoding by the update rules.
class Tableau {
   public:
    Tableau() = default;

    /// |0...0>: stabilizers Z_q, destabilizers X_q.
    static Tableau zero_state(size_t n);

    /// Builds a tableau from n commuting, independent stabilizer generators
    /// (row i is sign_i * X(xs_i) Z(zs_i)); destabilizers are solved for.
    /// Throws std::invalid_argument when the rows fail to commute or are
    /// dependent.
    static Tableau from_stabilizers(const BitMatrix &xs, const BitMatrix &zs, const std::vector<bool> &signs);

    size_t qubit_count() const { return n_; }

    BitVector stabilizer_x(size_t i) const { return xs_.row(n_ + i); }
    BitVector stabilizer_z(size_t i) const { return zs_.row(n_ + i); }
    /// true means the generator carries a -1 sign.
    bool stabilizer_sign(size_t i) const { return signs_[n_ + i]; }
    /// e.g. "+XZ_Y" for generator i.
    std::string stabilizer_string(size_t i) const;

    /// Conjugates every row by `gate` on `qubit`.
    void apply(Gate gate, size_t qubit);

    /// Measures Z on `qubit`, collapsing the state. Random outcomes are
    /// fair coins from `rng`; when several stabilizers anticommute with Z,
    /// the lowest-index one is the pivot.
    bool measure_z(size_t qubit, Rng &rng);

    /// As measure_z, but a random outcome is replaced by `outcome_if_random`.
    bool measure_z_forced(size_t qubit, bool outcome_if_random);

    /// If +/-P is in the stabilizer group, returns its sign (true for -P);
    /// otherwise nullopt. P = X(x) Z(z) in the Y-convention above.
    std::optional<bool> group_sign(const BitVector &x, const BitVector &z) const;

    /// Stabilizers pairwise commute and are independent, and destabilizer i
    /// anticommutes exactly with stabilizer i while commuting with every
    /// other row.
    bool check_invariants() const;

    bool operator==(const Tableau &other) const = default;

   private:
    template <typename CoinFn>
    bool measure_impl(size_t qubit, CoinFn &&coin);
    /// row h <- row i * row h.
    void rowsum(size_t h, size_t i);

    size_t n_ = 0;
    BitMatrix xs_;
    BitMatrix zs_;
    std::vector<uint8_t> signs_;
};

/// Stabilizer tableau of the CSS state |S> for S = colspan(b):
/// X(u) for a basis u of S, then Z(v) for a basis v of S-perp, all signs +.
/// Throws NotSelfOrthogonalError unless b^T b = 0.
Tableau css_tableau(const BitMatrix &b);

Tableau apply_clifford(Tableau t, size_t qubit, Gate gate);

/// One computational-basis sample of the state, measuring qubits 0..n-1 in
/// turn on a private copy. O(n^3) worst case per sample.
BitVector sample_basis(const Tableau &t, Rng &rng);

/// Precompiled sampler for a fixed stabilizer state. The measurement
/// distribution of a stabilizer state is uniform on an affine subspace
/// anchor + span(X parts of the stabilizers); the anchor is found once with
/// deterministic measurements and the span is row-reduced once, after which
/// each sample costs one random combination of the span basis.
class CompiledSampler {
   public:
    explicit CompiledSampler(const Tableau &t);

    size_t qubit_count() const { return anchor_.size(); }
    /// log2 of the support size.
    size_t support_dimension() const { return span_.size(); }
    const BitVector &anchor() const { return anchor_; }

    BitVector sample(Rng &rng) const;

   private:
    BitVector anchor_;
    std::vector<BitVector> span_;
};

}  // namespace colorz

#endif
