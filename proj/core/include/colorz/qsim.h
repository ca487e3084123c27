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

#ifndef COLORZ_QSIM_H
#define COLORZ_QSIM_H

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "colorz/bit_matrix.h"
#include "colorz/estimator.h"
#include "colorz/ising.h"
#include "colorz/stabilizer.h"

namespace colorz {

inline constexpr size_t kDefaultQubitCap = 26;

/// Row-major 2x2 matrices: {m00, m01, m10, m11}.
using RealMatrix2 = std::array<double, 4>;
using ComplexMatrix2 = std::array<std::complex<double>, 4>;

ComplexMatrix2 gate_matrix(Gate gate);

/// Dense state vector. Basis index bit q is the value of qubit (vertex) q.
class DenseState {
   public:
    /// |0...0> on n qubits; throws CapExceededError when n > cap.
    explicit DenseState(size_t n, size_t cap = kDefaultQubitCap);

    size_t qubit_count() const { return n_; }
    std::span<const std::complex<double>> amplitudes() const { return amps_; }
    std::span<std::complex<double>> amplitudes() { return amps_; }

    void apply(size_t qubit, const ComplexMatrix2 &u);
    void apply(size_t qubit, const RealMatrix2 &o);
    double norm_squared() const;

   private:
    size_t n_;
    std::vector<std::complex<double>> amps_;
};

/// |Omega> = |S|^(-1/2) sum over S = colspan(b) of |s>.
DenseState build_omega_dense(const BitMatrix &b, size_t qubit_cap = kDefaultQubitCap,
                             size_t enumeration_cap = kDefaultEnumerationCap);

/// Real orthogonal O with O^T Z O = A = [[x, y], [y, -x]]. Convention: O is
/// the rotation by theta/2, O = [[cos(theta/2), sin(theta/2)],
/// [-sin(theta/2), cos(theta/2)]]; at theta = 0 it is the identity.
RealMatrix2 diagonalize_A(const LocalPhase &phase);

/// A_a = [[x, y], [y, -x]].
RealMatrix2 observable_A(const LocalPhase &phase);

/// |amplitude|^2 for every basis index.
std::vector<double> dense_distribution(const DenseState &state);

/// <psi| Z^{(x)n} |psi> = sum_x p_x (-1)^|x|.
double dense_parity_expectation(const DenseState &state);

/// Emulates the measurement protocol: prepares |xi> = (x)_a O_a |Omega>,
/// samples K strings from |<x|xi>|^2 by inverting a cumulative table, and
/// averages the parity sign (-1)^|x|, whose mean is <Omega|A|Omega>.
EstimateResult emulate_quantum_protocol(const IsingModel &m, const SamplePlan &plan, uint64_t seed,
                                        const EstimateOptions &options = {}, size_t qubit_cap = kDefaultQubitCap);

/// Exact mean of the protocol's parity observable on |xi>.
double emulate_quantum_expectation(const IsingModel &m, size_t qubit_cap = kDefaultQubitCap);

}  // namespace colorz

#endif
