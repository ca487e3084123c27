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

#include "colorz/estimator.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

#include "colorz/errors.h"
#include "colorz/log_sum.h"
#include "colorz/random.h"
#include "colorz/stabilizer.h"
#include "shards.h"

namespace colorz {

namespace {

constexpr uint64_t kBaselineStreamSalt = 0xBA5E11E5EEDULL;

void check_accuracy_domain(double epsilon, double confidence) {
    if (!(epsilon > 0.0 && epsilon <= 2.0)) {
        throw DomainError("epsilon must lie in (0, 2], got " + std::to_string(epsilon));
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw DomainError("confidence must lie in (0, 1), got " + std::to_string(confidence));
    }
}

uint64_t shard_count(uint64_t samples) { return (samples + kShardSize - 1) / kShardSize; }

double log_abs_diff(double log_scale, double a, double b) {
    double d = std::abs(a - b);
    return d == 0.0 ? -std::numeric_limits<double>::infinity() : log_scale + std::log(d);
}

}  // namespace

SamplePlan plan_samples(double epsilon, double confidence) {
    check_accuracy_domain(epsilon, confidence);
    double k = std::ceil(16.0 / (epsilon * epsilon) * std::log(4.0 / (1.0 - confidence)));
    return SamplePlan{epsilon, confidence, static_cast<uint64_t>(k)};
}

SamplePlan plan_with_samples(double epsilon, double confidence, uint64_t samples) {
    check_accuracy_domain(epsilon, confidence);
    if (samples == 0) {
        throw DomainError("sample count must be positive");
    }
    return SamplePlan{epsilon, confidence, samples};
}

std::complex<double> phase_product(std::span<const double> theta, const BitVector &x) {
    double angle = 0.0;
    for (size_t a = 0; a < theta.size(); a++) {
        angle += x.get(a) ? theta[a] : -theta[a];
    }
    return {std::cos(angle), std::sin(angle)};
}

EstimateResult estimate_expectation(const IsingModel &m, const SamplePlan &plan, uint64_t seed,
                                    const EstimateOptions &options) {
    auto start = std::chrono::steady_clock::now();
    const size_t V = m.vertex_count();
    Tableau phi = css_tableau(m.incidence());
    for (size_t q = 0; q < V; q++) {
        phi.apply(Gate::kHP, q);
    }
    std::vector<double> theta;
    theta.reserve(V);
    for (const LocalPhase &p : local_phases(m)) {
        theta.push_back(p.theta);
    }
    std::optional<CompiledSampler> compiled;
    if (options.sampler == SamplerKind::kCompiled) {
        compiled.emplace(phi);
    }

    const uint64_t shards = shard_count(plan.samples);
    auto partial = internal::run_shards<std::complex<double>>(shards, options.threads, [&](uint64_t s) {
        Rng rng = shard_rng(seed, s);
        uint64_t begin = s * kShardSize;
        uint64_t end = std::min(plan.samples, begin + kShardSize);
        std::complex<double> acc = 0.0;
        for (uint64_t i = begin; i < end; i++) {
            BitVector x = compiled ? compiled->sample(rng) : sample_basis(phi, rng);
            std::complex<double> f = phase_product(theta, x);
            assert(std::abs(std::abs(f) - 1.0) < 1e-12);
            acc += f;
        }
        return acc;
    });
    std::complex<double> total = 0.0;
    for (const auto &p : partial) {
        total += p;
    }

    EstimateResult r;
    r.method = "stabilizer-expectation";
    r.expectation = total / static_cast<double>(plan.samples);
    r.log_prefactor = log_expectation_prefactor(m);
    r.z_estimate = std::exp(r.log_prefactor) * r.expectation.real();
    r.log_error_bound = r.log_prefactor + std::log(plan.epsilon);
    r.samples = plan.samples;
    r.seed = seed;
    r.imag_diagnostic = std::abs(r.expectation.imag());
    r.wall_time = std::chrono::steady_clock::now() - start;
    return r;
}

BaselinePlan plan_baseline(double epsilon, double confidence) {
    check_accuracy_domain(epsilon, confidence);
    auto groups = static_cast<uint64_t>(std::ceil(8.0 * std::log(2.0 / (1.0 - confidence))));
    groups |= 1;
    auto group_size = static_cast<uint64_t>(std::ceil(4.0 / (epsilon * epsilon)));
    return BaselinePlan{epsilon, confidence, groups, group_size};
}

EstimateResult estimate_overlap_baseline(const IsingModel &m, const BaselinePlan &plan, uint64_t seed,
                                         const EstimateOptions &options) {
    auto start = std::chrono::steady_clock::now();
    const size_t V = m.vertex_count();
    std::vector<LocalPhase> phases = local_phases(m);
    std::vector<double> p_one(V);
    for (size_t a = 0; a < V; a++) {
        p_one[a] = phases[a].amplitude_y * phases[a].amplitude_y;
    }
    // x is in S iff it is orthogonal to every vector of S-perp.
    BitMatrix checks = nullspace_basis(m.incidence().transposed()).transposed();
    const double log_inv_sqrt_code = -0.5 * static_cast<double>(V - checks.rows()) * std::numbers::ln2;

    const uint64_t stream = splitmix64(seed ^ kBaselineStreamSalt);
    std::vector<double> group_log_mean = internal::run_shards<double>(plan.groups, options.threads, [&](uint64_t g) {
        Rng rng = shard_rng(stream, g);
        LogSumExp sum;
        BitVector x(V);
        for (uint64_t i = 0; i < plan.group_size; i++) {
            double log_amp = 0.0;
            for (size_t a = 0; a < V; a++) {
                bool bit = uniform_unit(rng) < p_one[a];
                x.set(a, bit);
                log_amp += bit ? phases[a].log_y : phases[a].log_x;
            }
            if (!checks.multiply(x).any()) {
                sum.add(log_inv_sqrt_code - log_amp);
            }
        }
        return sum.log() - std::log(static_cast<double>(plan.group_size));
    });
    std::sort(group_log_mean.begin(), group_log_mean.end());
    double log_median = group_log_mean[group_log_mean.size() / 2];

    EstimateResult r;
    r.method = "overlap-baseline";
    r.expectation = std::exp(log_median);
    r.log_prefactor = gamma(m).log_value;
    r.z_estimate = std::exp(r.log_prefactor + log_median);
    r.log_error_bound = r.log_prefactor + std::log(plan.epsilon);
    r.samples = plan.total();
    r.seed = seed;
    r.imag_diagnostic = 0.0;
    r.wall_time = std::chrono::steady_clock::now() - start;
    return r;
}

EstimateResult estimate_overlap_baseline(const IsingModel &m, double epsilon, double confidence, uint64_t seed,
                                         const EstimateOptions &options) {
    return estimate_overlap_baseline(m, plan_baseline(epsilon, confidence), seed, options);
}

ComparisonReport compare_methods(const IsingModel &m, double epsilon, double confidence, uint64_t seed,
                                 const EstimateOptions &options, size_t cap) {
    ComparisonReport rep;
    rep.epsilon = epsilon;
    rep.confidence = confidence;

    double log_expectation = log_exact_expectation_codeword_sum(m, cap);
    rep.expectation_exact = std::exp(log_expectation);
    rep.log_z_exact = log_expectation_prefactor(m) + log_expectation;
    rep.log_overlap_exact = rep.log_z_exact - gamma(m).log_value;

    // Equal budgets: each method gets at least its own planned count.
    SamplePlan main_plan = plan_samples(epsilon, confidence);
    BaselinePlan base_plan = plan_baseline(epsilon, confidence);
    base_plan.group_size = std::max(base_plan.group_size, (main_plan.samples + base_plan.groups - 1) / base_plan.groups);
    rep.sample_budget = base_plan.total();
    main_plan.samples = rep.sample_budget;

    rep.main = estimate_expectation(m, main_plan, seed, options);
    rep.baseline = estimate_overlap_baseline(m, base_plan, seed, options);

    double overlap_exact = std::exp(rep.log_overlap_exact);
    rep.normalized_error_main = std::abs(rep.main.expectation.real() - rep.expectation_exact);
    rep.normalized_error_baseline = std::abs(rep.baseline.expectation.real() - overlap_exact);
    rep.log_abs_error_main =
        log_abs_diff(rep.main.log_prefactor, rep.main.expectation.real(), rep.expectation_exact);
    rep.log_abs_error_baseline =
        log_abs_diff(rep.baseline.log_prefactor, rep.baseline.expectation.real(), overlap_exact);

    rep.log_bound_new = rep.main.log_error_bound;
    rep.log_bound_old = rep.baseline.log_error_bound;
    rep.bound_ratio_log2 = -0.5 * (static_cast<double>(m.face_count()) - 2.0);
    rep.bound_ratio = std::exp2(rep.bound_ratio_log2);
    rep.old_bound_exceeds_z = rep.log_bound_old > rep.log_z_exact;
    rep.new_bound_exceeds_z = rep.log_bound_new > rep.log_z_exact;
    return rep;
}

}  // namespace colorz
