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

#include "colorz/ising.h"

#include <bit>
#include <numbers>
#include <stdexcept>

#include "colorz/errors.h"
#include "colorz/log_sum.h"

namespace colorz {

namespace {

// Gray-code walks re-derive their running log weight from scratch at this
// interval so rounding drift stays bounded.
constexpr uint64_t kRefreshInterval = 1024;

void check_cap(const char *what, size_t needed, size_t cap) {
    if (needed > cap) {
        throw CapExceededError(std::string(what) + ": needs 2^" + std::to_string(needed) +
                               " terms, enumeration cap is 2^" + std::to_string(cap));
    }
}

}  // namespace

IsingModel::IsingModel(Colex colex, double beta, std::vector<double> couplings)
    : colex_(std::move(colex)), beta_(beta), couplings_(std::move(couplings)) {
    if (!std::isfinite(beta_) || beta_ < 0.0) {
        throw DomainError("beta must be finite and >= 0, got " + std::to_string(beta_));
    }
    if (couplings_.size() != colex_.vertex_count) {
        throw DomainError("expected " + std::to_string(colex_.vertex_count) + " couplings, got " +
                          std::to_string(couplings_.size()));
    }
    for (size_t a = 0; a < couplings_.size(); a++) {
        if (!std::isfinite(couplings_[a])) {
            throw DomainError("coupling " + std::to_string(a) + " is not finite");
        }
    }
    ValidationReport report = validate(colex_);
    if (!report.ok()) {
        throw ValidationError("not a valid colex:\n" + report.to_string());
    }
    derived_ = derived_quantities(colex_);
    triples_ = vertex_face_triples(colex_);
    incidence_ = incidence_matrix(colex_);
    size_t r = rank(incidence_);
    if (r + 2 != colex_.faces.size()) {
        throw ValidationError("incidence matrix has rank " + std::to_string(r) + ", expected F - 2 = " +
                              std::to_string(colex_.faces.size() - 2));
    }
}

IsingModel IsingModel::uniform(Colex colex, double beta, double coupling) {
    size_t n = colex.vertex_count;
    return IsingModel(std::move(colex), beta, std::vector<double>(n, coupling));
}

double energy(const IsingModel &m, std::span<const int> spins) {
    if (spins.size() != m.face_count()) {
        throw std::invalid_argument("energy: expected " + std::to_string(m.face_count()) + " spins, got " +
                                    std::to_string(spins.size()));
    }
    for (int s : spins) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("energy: spins must be +1 or -1");
        }
    }
    double e = 0.0;
    const auto &triples = m.triples();
    auto j = m.couplings();
    for (size_t a = 0; a < triples.size(); a++) {
        e -= j[a] * spins[triples[a][0]] * spins[triples[a][1]] * spins[triples[a][2]];
    }
    return e;
}

Gamma gamma(const IsingModel &m) {
    // log(e^{2t} + e^{-2t}) = 2|t| + log1p(e^{-4|t|})
    double acc = 0.0;
    for (double j : m.couplings()) {
        double t = std::abs(m.beta() * j);
        acc += 2.0 * t + std::log1p(std::exp(-4.0 * t));
    }
    double f = static_cast<double>(m.face_count());
    return Gamma{0.5 * (f + 2.0) * std::numbers::ln2 + 0.5 * acc};
}

double log_expectation_prefactor(const IsingModel &m) {
    double f = static_cast<double>(m.face_count());
    return gamma(m).log_value - 0.5 * (f - 2.0) * std::numbers::ln2;
}

LocalPhase local_phase(double t) {
    LocalPhase p;
    if (t == 0.0) {
        p.amplitude_x = p.amplitude_y = std::numbers::sqrt2 / 2.0;
        p.theta = std::numbers::pi / 4.0;
        p.log_x = p.log_y = -0.5 * std::numbers::ln2;
        return p;
    }
    // x = e^t / sqrt(e^{2t} + e^{-2t}), y = e^{-t} / sqrt(...), evaluated on
    // the side where the exponential decays.
    double e = std::exp(-4.0 * std::abs(t));
    double half_log_norm = 0.5 * std::log1p(e);
    double inv = 1.0 / std::sqrt(1.0 + e);
    double small = std::exp(-2.0 * std::abs(t)) * inv;
    if (t > 0.0) {
        p.amplitude_x = inv;
        p.amplitude_y = small;
        p.log_x = -half_log_norm;
        p.log_y = -2.0 * t - half_log_norm;
    } else {
        p.amplitude_x = small;
        p.amplitude_y = inv;
        p.log_x = 2.0 * t - half_log_norm;
        p.log_y = -half_log_norm;
    }
    p.theta = std::atan2(p.amplitude_y, p.amplitude_x);
    return p;
}

std::vector<LocalPhase> local_phases(const IsingModel &m) {
    std::vector<LocalPhase> out;
    out.reserve(m.vertex_count());
    for (double j : m.couplings()) {
        out.push_back(local_phase(m.beta() * j));
    }
    return out;
}

double log_exact_Z_spin_enumeration(const IsingModel &m, size_t cap) {
    const size_t F = m.face_count();
    check_cap("spin enumeration", F, cap);
    const size_t V = m.vertex_count();
    const auto &triples = m.triples();
    std::vector<double> bj(V);
    for (size_t a = 0; a < V; a++) {
        bj[a] = m.beta() * m.couplings()[a];
    }
    std::vector<std::vector<uint32_t>> vertices_of(F);
    for (size_t a = 0; a < V; a++) {
        for (uint32_t f : triples[a]) {
            vertices_of[f].push_back(static_cast<uint32_t>(a));
        }
    }

    // product[a] = sigma_f sigma_g sigma_h at vertex a; -beta H = sum_a beta J_a product[a].
    std::vector<int> product(V, 1);
    auto fresh = [&] {
        double s = 0.0;
        for (size_t a = 0; a < V; a++) {
            s += bj[a] * product[a];
        }
        return s;
    };
    double log_weight = fresh();
    LogSumExp sum;
    sum.add(log_weight);
    const uint64_t total = uint64_t{1} << F;
    for (uint64_t step = 1; step < total; step++) {
        uint32_t f = static_cast<uint32_t>(std::countr_zero(step));
        for (uint32_t a : vertices_of[f]) {
            log_weight -= 2.0 * bj[a] * product[a];
            product[a] = -product[a];
        }
        if (step % kRefreshInterval == 0) {
            log_weight = fresh();
        }
        sum.add(log_weight);
    }
    return sum.log();
}

double log_exact_expectation_codeword_sum(const IsingModel &m, size_t cap, CodewordSumMode mode) {
    BitMatrix basis = column_space_basis(m.incidence());
    check_cap("codeword sum", basis.cols(), cap);
    const size_t V = m.vertex_count();
    std::vector<LocalPhase> phases = local_phases(m);
    std::vector<double> log_ratio(V);
    double base = 0.0;
    for (size_t a = 0; a < V; a++) {
        log_ratio[a] = phases[a].log_y - phases[a].log_x;
        base += phases[a].log_x;
    }
    auto fresh = [&](const BitVector &u) {
        double s = 0.0;
        for (size_t a = 0; a < V; a++) {
            s += u.get(a) ? phases[a].log_y : phases[a].log_x;
        }
        return s;
    };

    CodewordEnumerator walk(basis, cap);
    std::vector<std::vector<uint32_t>> support(walk.dimension());
    for (size_t k = 0; k < walk.dimension(); k++) {
        const BitVector &b = walk.basis_vector(k);
        for (size_t a = 0; a < V; a++) {
            if (b.get(a)) {
                support[k].push_back(static_cast<uint32_t>(a));
            }
        }
    }

    LogSumExp sum;
    double log_weight = base;
    sum.add(log_weight);
    while (walk.next()) {
        if (mode == CodewordSumMode::kNaive || walk.index() % kRefreshInterval == 0) {
            log_weight = fresh(walk.current());
        } else {
            const BitVector &u = walk.current();
            for (uint32_t a : support[*walk.last_flipped()]) {
                log_weight += u.get(a) ? log_ratio[a] : -log_ratio[a];
            }
        }
        sum.add(log_weight);
    }
    return sum.log();
}

double log_exact_Z_via_expectation(const IsingModel &m, size_t cap) {
    return log_expectation_prefactor(m) + log_exact_expectation_codeword_sum(m, cap);
}

double log_exact_overlap(const IsingModel &m, size_t cap) {
    BitMatrix basis = column_space_basis(m.incidence());
    const size_t k = basis.cols();
    check_cap("overlap sum", k, cap);
    const size_t V = m.vertex_count();
    std::vector<LocalPhase> phases = local_phases(m);
    LogSumExp sum;
    BitVector t(k);
    for (uint64_t code = 0; code < (uint64_t{1} << k); code++) {
        for (size_t i = 0; i < k; i++) {
            t.set(i, (code >> i) & 1);
        }
        BitVector s = basis.multiply(t);
        double log_amp = 0.0;
        for (size_t a = 0; a < V; a++) {
            log_amp += s.get(a) ? phases[a].log_y : phases[a].log_x;
        }
        sum.add(log_amp);
    }
    return sum.log() - 0.5 * static_cast<double>(k) * std::numbers::ln2;
}

}  // namespace colorz
