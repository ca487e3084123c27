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

#ifndef COLORZ_ISING_H
#define COLORZ_ISING_H

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "colorz/bit_matrix.h"
#include "colorz/colex.h"

namespace colorz {

/// 3-body Ising model on the faces of a colex: one spin per face and one
/// coupling J_a per vertex acting on the three faces around it,
///   H(sigma) = -sum_a J_a sigma_f(a) sigma_g(a) sigma_h(a).
/// Antiferromagnetic terms are negative couplings; beta is never negative.
class IsingModel {
   public:
    /// Throws ValidationError for an invalid colex and DomainError for a
    /// negative or non-finite beta, non-finite couplings, or a coupling count
    /// other than V.
    IsingModel(Colex colex, double beta, std::vector<double> couplings);
    static IsingModel uniform(Colex colex, double beta, double coupling);

    const Colex &colex() const { return colex_; }
    double beta() const { return beta_; }
    std::span<const double> couplings() const { return couplings_; }

    size_t vertex_count() const { return colex_.vertex_count; }
    size_t face_count() const { return colex_.faces.size(); }
    size_t genus() const { return derived_.genus; }
    const DerivedQuantities &derived() const { return derived_; }
    const std::vector<FaceTriple> &triples() const { return triples_; }
    const BitMatrix &incidence() const { return incidence_; }

   private:
    Colex colex_;
    double beta_;
    std::vector<double> couplings_;
    DerivedQuantities derived_;
    std::vector<FaceTriple> triples_;
    BitMatrix incidence_;
};

/// Per-vertex amplitudes of |alpha_a> = x|0> + y|1> and the rotation angle
/// theta with x = cos(theta), y = sin(theta). Logs are kept separately since
/// x or y underflow at low temperature.
struct LocalPhase {
    double amplitude_x = 0.0;
    double amplitude_y = 0.0;
    double theta = 0.0;
    double log_x = 0.0;
    double log_y = 0.0;
};

/// Energy of a face-spin configuration (+1/-1 per face). Throws
/// std::invalid_argument on a length mismatch or a value other than +/-1.
double energy(const IsingModel &m, std::span<const int> spins);

/// gamma = sqrt(2^(F+2)) prod_a sqrt(e^(2 beta J_a) + e^(-2 beta J_a)),
/// carried as its natural log.
struct Gamma {
    double log_value = 0.0;
    /// gamma itself when it fits in a double.
    std::optional<double> linear() const {
        double v = std::exp(log_value);
        return std::isfinite(v) ? std::optional<double>(v) : std::nullopt;
    }
};

Gamma gamma(const IsingModel &m);

/// log(gamma / sqrt(2^(F-2))), the factor between <Omega|A|Omega> and Z.
double log_expectation_prefactor(const IsingModel &m);

LocalPhase local_phase(double beta_coupling);
std::vector<LocalPhase> local_phases(const IsingModel &m);

/// Partition function by direct summation over all 2^F spin configurations
/// in Gray-code order, returned as log Z. Throws CapExceededError when
/// F > cap.
double log_exact_Z_spin_enumeration(const IsingModel &m, size_t cap = kDefaultEnumerationCap);
inline double exact_Z_spin_enumeration(const IsingModel &m, size_t cap = kDefaultEnumerationCap) {
    return std::exp(log_exact_Z_spin_enumeration(m, cap));
}

enum class CodewordSumMode {
    /// Gray-code walk, updating the log weight by log(y_a/x_a) per toggled bit.
    kIncremental,
    /// Recomputes every product from scratch. Slow; kept as a cross-check.
    kNaive,
};

/// <Omega|A|Omega> = sum over codewords u of S of
///   prod_{u_a = 0} x_a prod_{u_a = 1} y_a,
/// returned as its natural log. Throws CapExceededError when F - 2 > cap.
double log_exact_expectation_codeword_sum(const IsingModel &m, size_t cap = kDefaultEnumerationCap,
                                          CodewordSumMode mode = CodewordSumMode::kIncremental);
inline double exact_expectation_codeword_sum(const IsingModel &m, size_t cap = kDefaultEnumerationCap,
                                             CodewordSumMode mode = CodewordSumMode::kIncremental) {
    return std::exp(log_exact_expectation_codeword_sum(m, cap, mode));
}

/// log Z from the expectation value: log gamma - (F-2)/2 log 2 + log <A>.
double log_exact_Z_via_expectation(const IsingModel &m, size_t cap = kDefaultEnumerationCap);
inline double exact_Z_via_expectation(const IsingModel &m, size_t cap = kDefaultEnumerationCap) {
    return std::exp(log_exact_Z_via_expectation(m, cap));
}

/// log <Omega|alpha>, summing prod_a <s_a|alpha_a> over S with each codeword
/// formed as B' t from scratch (binary counting over the basis), divided by
/// sqrt(|S|). Shares no iteration code with the Gray-code routes.
double log_exact_overlap(const IsingModel &m, size_t cap = kDefaultEnumerationCap);

}  // namespace colorz

#endif
