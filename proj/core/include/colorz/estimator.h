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

#ifndef COLORZ_ESTIMATOR_H
#define COLORZ_ESTIMATOR_H

#include <chrono>
#include <complex>
#include <cstdint>
#include <span>
#include <string>

#include "colorz/bit_matrix.h"
#include "colorz/ising.h"

namespace colorz {

/// Sample budget for an additive-error estimate of <Omega|A|Omega>.
struct SamplePlan {
    double epsilon = 0.0;
    double confidence = 0.0;
    uint64_t samples = 0;
};

/// K = ceil(16/eps^2 * ln(4/(1-p))). Hoeffding with |f| <= 1 gives
/// P(|mean - E| > eps/2) <= 2 exp(-K eps^2 / 16) per component; splitting
/// the failure budget 1-p over the real and imaginary parts yields K.
/// Throws DomainError unless 0 < epsilon <= 2 and 0 < p < 1.
SamplePlan plan_samples(double epsilon, double confidence);

/// Same validation, but with an explicit sample count.
SamplePlan plan_with_samples(double epsilon, double confidence, uint64_t samples);

enum class SamplerKind {
    /// CompiledSampler: one affine-subspace draw per sample.
    kCompiled,
    /// sample_basis: qubit-by-qubit Z measurement on a tableau copy.
    kMeasurement,
};

struct EstimateOptions {
    size_t threads = 1;
    SamplerKind sampler = SamplerKind::kCompiled;
};

/// Samples are split into shards of this size; shard i draws from
/// shard_rng(seed, i) and shard sums are reduced in index order, so results
/// do not depend on the thread count.
inline constexpr uint64_t kShardSize = 4096;

struct EstimateResult {
    std::string method;
    /// Sample mean c. Purely real for the baseline and quantum emulation.
    std::complex<double> expectation;
    /// exp(log_prefactor) * Re(c), possibly +/-inf when it overflows.
    double z_estimate = 0.0;
    /// log of the factor mapping `expectation` to Z.
    double log_prefactor = 0.0;
    /// log of the guaranteed additive error on Z at the planned confidence.
    double log_error_bound = 0.0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    /// |Im c|; the target is real, so this should be within epsilon of 0.
    double imag_diagnostic = 0.0;
    std::chrono::duration<double> wall_time{0};
};

/// prod_a exp(i theta_a (2 x_a - 1)), from one signed sum of angles.
std::complex<double> phase_product(std::span<const double> theta, const BitVector &x);

/// Main estimator: samples x from (HP)^{(x)V} |Omega> and averages
/// phase_product(theta, x), which has mean <Omega|A|Omega>. With probability
/// >= p, |Z_est - Z| <= gamma * eps / sqrt(2^(F-2)).
EstimateResult estimate_expectation(const IsingModel &m, const SamplePlan &plan, uint64_t seed,
                                    const EstimateOptions &options = {});

/// Median-of-means layout of the overlap baseline.
struct BaselinePlan {
    double epsilon = 0.0;
    double confidence = 0.0;
    /// Odd, so the median is a single group mean.
    uint64_t groups = 0;
    uint64_t group_size = 0;
    uint64_t total() const { return groups * group_size; }
};

/// groups = ceil(8 ln(2/(1-p))) rounded up to odd, group_size = ceil(4/eps^2).
BaselinePlan plan_baseline(double epsilon, double confidence);

/// Overlap baseline: draws x with independent bits, P(x_a = 1) = y_a^2, and
/// averages <Omega|x>/<x|alpha>, an unbiased estimate of <Omega|alpha> with
/// second moment 1. Z_base = gamma * median of group means; with
/// probability >= p, |Z_base - Z| <= gamma * eps.
EstimateResult estimate_overlap_baseline(const IsingModel &m, const BaselinePlan &plan, uint64_t seed,
                                         const EstimateOptions &options = {});
EstimateResult estimate_overlap_baseline(const IsingModel &m, double epsilon, double confidence, uint64_t seed,
                                         const EstimateOptions &options = {});

struct ComparisonReport {
    double epsilon = 0.0;
    double confidence = 0.0;
    uint64_t sample_budget = 0;

    double log_z_exact = 0.0;
    double expectation_exact = 0.0;
    double log_overlap_exact = 0.0;

    EstimateResult main;
    EstimateResult baseline;

    /// |Z_est - Z| for each method, in log form (-inf for an exact hit).
    double log_abs_error_main = 0.0;
    double log_abs_error_baseline = 0.0;
    /// Errors on the sampled quantities: |Re c - <A>| and |g - <Omega|alpha>|,
    /// i.e. absolute errors divided by gamma/sqrt(2^(F-2)) and gamma.
    double normalized_error_main = 0.0;
    double normalized_error_baseline = 0.0;

    /// log Delta_new = log(gamma eps / sqrt(2^(F-2))), log Delta_old = log(gamma eps).
    double log_bound_new = 0.0;
    double log_bound_old = 0.0;
    /// Delta_new / Delta_old = 2^(-(F-2)/2).
    double bound_ratio = 0.0;
    double bound_ratio_log2 = 0.0;
    /// The baseline's guarantee is larger than Z itself.
    bool old_bound_exceeds_z = false;
    bool new_bound_exceeds_z = false;
};

/// Runs both estimators on one instance with the same total sample count
/// and scores them against the exact codeword-sum oracle. Throws
/// CapExceededError when the oracle is out of reach.
ComparisonReport compare_methods(const IsingModel &m, double epsilon, double confidence, uint64_t seed,
                                 const EstimateOptions &options = {}, size_t cap = kDefaultEnumerationCap);

}  // namespace colorz

#endif
