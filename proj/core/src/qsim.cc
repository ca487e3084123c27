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

#include "colorz/qsim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "colorz/errors.h"
#include "colorz/random.h"
#include "shards.h"

namespace colorz {

namespace {

DenseState prepare_xi(const IsingModel &m, size_t qubit_cap) {
    DenseState state = build_omega_dense(m.incidence(), qubit_cap);
    std::vector<LocalPhase> phases = local_phases(m);
    for (size_t a = 0; a < phases.size(); a++) {
        state.apply(a, diagonalize_A(phases[a]));
    }
    return state;
}

}  // namespace

ComplexMatrix2 gate_matrix(Gate gate) {
    using C = std::complex<double>;
    const double h = std::numbers::sqrt2 / 2.0;
    switch (gate) {
        case Gate::kH:
            return {C(h), C(h), C(h), C(-h)};
        case Gate::kP:
            return {C(1), C(0), C(0), C(0, 1)};
        case Gate::kZ:
            return {C(1), C(0), C(0), C(-1)};
        case Gate::kHP:
            // H * diag(1, i)
            return {C(h), C(0, h), C(h), C(0, -h)};
    }
    return {};
}

DenseState::DenseState(size_t n, size_t cap) : n_(n) {
    if (n > cap) {
        throw CapExceededError("dense state: " + std::to_string(n) + " qubits exceeds the cap of " +
                               std::to_string(cap));
    }
    amps_.assign(size_t{1} << n, 0.0);
    amps_[0] = 1.0;
}

void DenseState::apply(size_t qubit, const ComplexMatrix2 &u) {
    const size_t stride = size_t{1} << qubit;
    const size_t size = amps_.size();
    for (size_t block = 0; block < size; block += 2 * stride) {
        for (size_t i = block; i < block + stride; i++) {
            std::complex<double> a0 = amps_[i];
            std::complex<double> a1 = amps_[i + stride];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void DenseState::apply(size_t qubit, const RealMatrix2 &o) {
    const size_t stride = size_t{1} << qubit;
    const size_t size = amps_.size();
    for (size_t block = 0; block < size; block += 2 * stride) {
        for (size_t i = block; i < block + stride; i++) {
            std::complex<double> a0 = amps_[i];
            std::complex<double> a1 = amps_[i + stride];
            amps_[i] = o[0] * a0 + o[1] * a1;
            amps_[i + stride] = o[2] * a0 + o[3] * a1;
        }
    }
}

double DenseState::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

DenseState build_omega_dense(const BitMatrix &b, size_t qubit_cap, size_t enumeration_cap) {
    DenseState state(b.rows(), qubit_cap);
    BitMatrix basis = column_space_basis(b);
    CodewordEnumerator walk(basis, enumeration_cap);
    auto amps = state.amplitudes();
    amps[0] = 0.0;
    const double amp = std::exp(-0.5 * static_cast<double>(walk.dimension()) * std::numbers::ln2);
    do {
        // n <= 26, so the codeword fits in the first word.
        uint64_t index = b.rows() == 0 ? 0 : walk.current().words()[0];
        amps[index] = amp;
    } while (walk.next());
    return state;
}

RealMatrix2 diagonalize_A(const LocalPhase &phase) {
    double c = std::cos(0.5 * phase.theta);
    double s = std::sin(0.5 * phase.theta);
    return {c, s, -s, c};
}

RealMatrix2 observable_A(const LocalPhase &phase) {
    return {phase.amplitude_x, phase.amplitude_y, phase.amplitude_y, -phase.amplitude_x};
}

std::vector<double> dense_distribution(const DenseState &state) {
    std::vector<double> p;
    p.reserve(state.amplitudes().size());
    for (const auto &a : state.amplitudes()) {
        p.push_back(std::norm(a));
    }
    return p;
}

double dense_parity_expectation(const DenseState &state) {
    double s = 0.0;
    auto amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        s += (std::popcount(i) & 1) ? -p : p;
    }
    return s;
}

double emulate_quantum_expectation(const IsingModel &m, size_t qubit_cap) {
    return dense_parity_expectation(prepare_xi(m, qubit_cap));
}

EstimateResult emulate_quantum_protocol(const IsingModel &m, const SamplePlan &plan, uint64_t seed,
                                        const EstimateOptions &options, size_t qubit_cap) {
    auto start = std::chrono::steady_clock::now();
    DenseState xi = prepare_xi(m, qubit_cap);
    std::vector<double> cumulative = dense_distribution(xi);
    for (size_t i = 1; i < cumulative.size(); i++) {
        cumulative[i] += cumulative[i - 1];
    }
    const double total_mass = cumulative.back();

    const uint64_t shards = (plan.samples + kShardSize - 1) / kShardSize;
    auto partial = internal::run_shards<int64_t>(shards, options.threads, [&](uint64_t s) {
        Rng rng = shard_rng(seed, s);
        uint64_t begin = s * kShardSize;
        uint64_t end = std::min(plan.samples, begin + kShardSize);
        int64_t acc = 0;
        for (uint64_t i = begin; i < end; i++) {
            double u = uniform_unit(rng) * total_mass;
            size_t x = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
            x = std::min(x, cumulative.size() - 1);
            acc += (std::popcount(x) & 1) ? -1 : 1;
        }
        return acc;
    });
    int64_t total = 0;
    for (int64_t p : partial) {
        total += p;
    }

    EstimateResult r;
    r.method = "quantum-emulation";
    r.expectation = static_cast<double>(total) / static_cast<double>(plan.samples);
    r.log_prefactor = log_expectation_prefactor(m);
    r.z_estimate = std::exp(r.log_prefactor) * r.expectation.real();
    r.log_error_bound = r.log_prefactor + std::log(plan.epsilon);
    r.samples = plan.samples;
    r.seed = seed;
    r.imag_diagnostic = 0.0;
    r.wall_time = std::chrono::steady_clock::now() - start;
    return r;
}

}  // namespace colorz
