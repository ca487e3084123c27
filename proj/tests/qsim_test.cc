// Copyright 2026 The colorz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "colorz/errors.h"
#include "colorz/ising.h"
#include "colorz/qsim.h"
#include "test_util.h"

namespace colorz {
namespace {

using cd = std::complex<double>;
using M2 = std::array<cd, 4>;
using testing::data_path;

M2 mul(const M2 &a, const M2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

M2 to_complex(const RealMatrix2 &r) { return {r[0], r[1], r[2], r[3]}; }

TEST(Decomposition, ZPdagHDHPReconstructsA) {
    const double h = 1 / std::sqrt(2.0);
    const cd i(0, 1);
    const M2 Z{1, 0, 0, -1}, H{h, h, h, -h}, P{1, 0, 0, i}, Pdag{1, 0, 0, -i};
    Rng rng(1);
    for (int trial = 0; trial < 1000; ++trial) {
        double bj = 2 * uniform_unit(rng) * (-2 + 4 * uniform_unit(rng));
        LocalPhase p = local_phase(bj);
        M2 D{std::exp(-i * p.theta), 0, 0, std::exp(i * p.theta)};
        M2 rebuilt = mul(Z, mul(Pdag, mul(H, mul(D, mul(H, P)))));
        RealMatrix2 a = observable_A(p);
        EXPECT_EQ(a[0], p.amplitude_x);
        EXPECT_EQ(a[1], p.amplitude_y);
        EXPECT_EQ(a[2], p.amplitude_y);
        EXPECT_EQ(a[3], -p.amplitude_x);
        for (int k = 0; k < 4; ++k) {
            ASSERT_LT(std::abs(rebuilt[k] - a[k]), 1e-12) << "beta*J = " << bj;
        }
        // The estimator's U must be H * P as a gate matrix.
        M2 u = gate_matrix(Gate::kHP), hp = mul(H, P);
        for (int k = 0; k < 4; ++k) {
            ASSERT_LT(std::abs(u[k] - hp[k]), 1e-15);
        }
    }
}

TEST(Decomposition, OrthogonalDiagonalizer) {
    Rng rng(2);
    const M2 Z{1, 0, 0, -1};
    for (int trial = 0; trial < 1000; ++trial) {
        LocalPhase p = local_phase(-3 + 6 * uniform_unit(rng));
        RealMatrix2 o = diagonalize_A(p);
        M2 oc = to_complex(o), ot{o[0], o[2], o[1], o[3]};
        M2 rebuilt = mul(ot, mul(Z, oc)), gram = mul(ot, oc);
        RealMatrix2 a = observable_A(p);
        for (int k = 0; k < 4; ++k) {
            ASSERT_LT(std::abs(rebuilt[k] - a[k]), 1e-12);
            ASSERT_LT(std::abs(gram[k] - (k == 0 || k == 3 ? 1.0 : 0.0)), 1e-12);
        }
    }
    RealMatrix2 near_z = diagonalize_A(local_phase(40.0));
    EXPECT_NEAR(near_z[0], 1.0, 1e-15);
    EXPECT_NEAR(near_z[1], 0.0, 1e-15);
    RealMatrix2 hadamard = observable_A(local_phase(0.0));
    EXPECT_NEAR(hadamard[0], std::numbers::sqrt2 / 2, 1e-16);
    EXPECT_NEAR(hadamard[3], -std::numbers::sqrt2 / 2, 1e-16);
}

TEST(BuildOmega, ZeroMatrixAndCodewords) {
    DenseState zero = build_omega_dense(BitMatrix(3, 2));
    auto p0 = dense_distribution(zero);
    EXPECT_EQ(p0[0], 1.0);
    for (const auto &[name, c] : testing::tiny_lattices()) {
        auto b = incidence_matrix(c);
        DenseState s = build_omega_dense(b);
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
        size_t nonzero = 0;
        double expected = std::exp2(-0.5 * double(c.face_count() - 2));
        for (size_t k = 0; k < s.amplitudes().size(); ++k) {
            cd a = s.amplitudes()[k];
            if (std::abs(a) > 0) {
                ++nonzero;
                EXPECT_NEAR(a.real(), expected, 1e-15);
                BitVector x(c.vertex_count);
                for (size_t v = 0; v < c.vertex_count; ++v) {
                    x.set(v, (k >> v) & 1);
                }
                EXPECT_TRUE(solve_membership(b, x).has_value());
            }
        }
        EXPECT_EQ(nonzero, size_t{1} << (c.face_count() - 2)) << name;
        EXPECT_NEAR(dense_parity_expectation(s), 1.0, 1e-12) << name;
    }
}

TEST(DenseState, CapIsEnforced) {
    EXPECT_THROW(DenseState(30, 26), CapExceededError);
    EXPECT_THROW(build_omega_dense(incidence_matrix(load_colex(data_path("hex_torus_18.json"))), 17),
                 CapExceededError);
}

TEST(DenseState, NormPreserved) {
    Rng rng(3);
    DenseState s = build_omega_dense(incidence_matrix(load_colex(data_path("octagonal_prism.json"))));
    for (size_t q = 0; q < s.qubit_count(); ++q) {
        s.apply(q, diagonalize_A(local_phase(-2 + 4 * uniform_unit(rng))));
        s.apply((q * 7) % s.qubit_count(), gate_matrix(Gate::kHP));
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
    }
    double total = 0;
    for (double p : dense_distribution(s)) {
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(Emulation, OracleTriangle) {
    Rng rng(4);
    for (const auto &[name, c] : testing::tiny_lattices()) {
        std::vector<double> j(c.vertex_count);
        for (auto &x : j) {
            x = -2 + 4 * uniform_unit(rng);
        }
        IsingModel m(c, 2 * uniform_unit(rng), j);
        double dense = emulate_quantum_expectation(m);
        double oracle = exact_expectation_codeword_sum(m);
        double via_z = std::exp(log_exact_Z_spin_enumeration(m) - log_expectation_prefactor(m));
        EXPECT_LT(testing::relative_error(dense, oracle), 1e-9) << name;
        EXPECT_LT(testing::relative_error(dense, via_z), 1e-9) << name;
    }
}

TEST(Emulation, ProtocolEstimates) {
    for (const auto &[name, c] : testing::tiny_lattices()) {
        size_t g = derived_quantities(c).genus;
        auto hot = emulate_quantum_protocol(IsingModel::uniform(c, 0.0, 1.0), plan_samples(0.05, 0.99), 21);
        EXPECT_NEAR(hot.expectation.real(), std::pow(4.0, -double(g)), 0.05) << name;
        EXPECT_EQ(hot.expectation.imag(), 0.0);
        IsingModel cold = IsingModel::uniform(c, 5.0, 1.0);
        auto r = emulate_quantum_protocol(cold, plan_samples(0.05, 0.99), 22);
        EXPECT_NEAR(r.expectation.real(), 1.0, 0.05) << name;
    }
}

TEST(Emulation, DeterministicAcrossThreads) {
    IsingModel m = IsingModel::uniform(load_colex(data_path("hex_torus_18.json")), 0.4, 1.0);
    auto plan = plan_with_samples(0.1, 0.9, 2 * kShardSize + 5);
    auto a = emulate_quantum_protocol(m, plan, 8, {1});
    auto b = emulate_quantum_protocol(m, plan, 8, {3});
    EXPECT_EQ(a.expectation, b.expectation);
    // Parity values are +-1 so K * c is an integer of the same parity as K.
    double sum = a.expectation.real() * static_cast<double>(plan.samples);
    EXPECT_NEAR(sum, std::round(sum), 1e-6);
    EXPECT_EQ((static_cast<int64_t>(std::llround(sum)) + static_cast<int64_t>(plan.samples)) % 2, 0);
}

}  // namespace
}  // namespace colorz
