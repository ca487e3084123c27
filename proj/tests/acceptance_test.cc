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


// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <cstdio>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "colorz/colex.h"
#include "colorz/estimator.h"
#include "colorz/ising.h"
#include "colorz/qsim.h"
#include "colorz/stabilizer.h"
#include "test_util.h"

namespace colorz {
namespace {

using Clock = std::chrono::steady_clock;
using testing::NamedColex;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string format(const char *fmt, auto... args) {
    char buf[1024];
    std::snprintf(buf, sizeof(buf), fmt, args...);
    return buf;
}

// |x/y - 1| for x = e^a, y = e^b.
double log_rel(double a, double b) { return std::abs(std::expm1(a - b)); }

struct Instance {
    std::string lattice;
    IsingModel model;
};

std::vector<Instance> oracle_instances() {
    Rng rng(20260101);
    std::vector<Instance> out;
    for (const NamedColex &nc : testing::small_lattices()) {
        for (int k = 0; k < 3; ++k) {
            double beta = 2.0 * uniform_unit(rng);
            std::vector<double> j(nc.colex.vertex_count);
            for (double &x : j) {
                x = -2.0 + 4.0 * uniform_unit(rng);
            }
            out.push_back({nc.name, IsingModel(nc.colex, beta, j)});
        }
    }
    return out;
}

Outcome criterion1(const std::vector<Instance> &instances) {
    double worst = 0.0, slowest = 0.0;
    std::map<std::string, size_t> faces;
    for (const Instance &in : instances) {
        auto start = Clock::now();
        double spins = log_exact_Z_spin_enumeration(in.model);
        double expectation = log_exact_Z_via_expectation(in.model);
        double overlap = gamma(in.model).log_value + log_exact_overlap(in.model);
        slowest = std::max(slowest, std::chrono::duration<double>(Clock::now() - start).count());
        worst = std::max({worst, log_rel(spins, expectation), log_rel(spins, overlap), log_rel(expectation, overlap)});
        faces[in.lattice] = in.model.face_count();
    }
    std::string lattices;
    for (const auto &[name, f] : faces) {
        lattices += format(" %s(F=%zu)", name.c_str(), f);
    }
    bool pass = instances.size() >= 20 && worst <= 1e-10;
    return {pass, format("%zu instances, max relative disagreement %.2e (tol 1e-10), slowest %.2f s;", instances.size(),
                        worst, slowest) +
                      lattices};
}

Outcome criterion2() {
    std::vector<NamedColex> lattices = testing::small_lattices();
    for (auto [r, c] : std::vector<std::pair<size_t, size_t>>{{4, 6}, {6, 6}, {8, 9}, {10, 12}, {14, 15}}) {
        lattices.push_back({format("hex_%zux%zu", r, c), generate_hexagonal(r, c)});
    }
    for (auto [r, c] : std::vector<std::pair<size_t, size_t>>{{2, 3}, {3, 3}, {4, 4}, {5, 6}}) {
        lattices.push_back({format("square_octagon_%zux%zu", r, c), generate_square_octagon(r, c)});
    }
    size_t bad = 0;
    std::string first_bad;
    for (const NamedColex &nc : lattices) {
        BitMatrix b = incidence_matrix(nc.colex);
        DerivedQuantities d = derived_quantities(nc.colex);
        bool ok = is_self_orthogonal(b) && rank(b) == d.faces - 2 && 2 * (d.faces - 2) + 4 * d.genus == d.vertices &&
                  d.encoded_qubits == 4 * d.genus;
        if (!ok) {
            ++bad;
            first_bad = nc.name;
        }
    }
    return {bad == 0, format("%zu lattices (V up to 840), %zu failing%s%s", lattices.size(), bad,
                             bad ? ", first " : "", first_bad.c_str())};
}

Outcome criterion3() {
    double hot_err = 0.0, cold_min = 1.0, z_err = 0.0;
    size_t count = 0;
    for (const NamedColex &nc : testing::small_lattices()) {
        size_t g = derived_quantities(nc.colex).genus;
        hot_err = std::max(hot_err, std::abs(exact_expectation_codeword_sum(IsingModel::uniform(nc.colex, 0.0, 1.0)) -
                                             std::pow(4.0, -static_cast<double>(g))));
        cold_min = std::min(cold_min, exact_expectation_codeword_sum(IsingModel::uniform(nc.colex, 6.0, 1.0)));
        double log_z = log_exact_Z_spin_enumeration(IsingModel::uniform(nc.colex, 0.0, 0.8));
        z_err = std::max(z_err, log_rel(log_z, static_cast<double>(nc.colex.face_count()) * std::log(2.0)));
        ++count;
    }
    bool pass = hot_err <= 1e-12 && cold_min >= 0.999 && z_err <= 1e-10;
    return {pass, format("%zu lattices: |<A>(beta=0) - 4^-g| <= %.1e, min <A>(betaJ=6) = %.6f, "
                         "|Z(beta=0)/2^F - 1| <= %.1e",
                         count, hot_err, cold_min, z_err)};
}

Outcome criterion4(const std::vector<Instance> &instances) {
    double max_gap = -INFINITY;
    size_t violations = 0;
    for (const Instance &in : instances) {
        double gap = log_exact_Z_spin_enumeration(in.model) - log_expectation_prefactor(in.model);
        max_gap = std::max(max_gap, gap);
        violations += gap > 0.0;
    }
    return {violations == 0,
            format("%zu instances, max log(Z / bound) = %.4f, %zu violations", instances.size(), max_gap, violations)};
}

IsingModel random_model(const Colex &c, double beta, uint64_t seed) {
    Rng rng(seed);
    std::vector<double> j(c.vertex_count);
    for (double &x : j) {
        x = -2.0 + 4.0 * uniform_unit(rng);
    }
    return IsingModel(c, beta, j);
}

Outcome criterion5() {
    const double eps = 0.1, p = 0.9;
    IsingModel m = random_model(generate_hexagonal(4, 3), 0.6, 5);
    double log_z = log_exact_Z_spin_enumeration(m);
    double log_bound = log_expectation_prefactor(m) + std::log(eps);
    SamplePlan plan = plan_samples(eps, p);
    int hits = 0;
    const int runs = 100;
    for (int s = 0; s < runs; ++s) {
        EstimateResult r = estimate_expectation(m, plan, 1000 + s);
        double err = std::abs(r.z_estimate - std::exp(log_z));
        hits += std::log(err) <= log_bound;
    }
    double need = p - 3.0 * std::sqrt(p * (1 - p) / runs);
    return {hits >= need * runs, format("hex_4x3 beta=0.6 random J, K=%llu: %d/%d runs within (gamma/sqrt(2^(F-2)))*eps"
                                        " (need >= %.4f)",
                                        static_cast<unsigned long long>(plan.samples), hits, runs, need)};
}

double tv_against_dense(const Colex &c, uint64_t seed, size_t samples, bool compiled) {
    BitMatrix b = incidence_matrix(c);
    Tableau t = css_tableau(b);
    DenseState dense = build_omega_dense(b);
    for (size_t q = 0; q < c.vertex_count; ++q) {
        t.apply(Gate::kHP, q);
        dense.apply(q, gate_matrix(Gate::kHP));
    }
    std::vector<double> p = dense_distribution(dense);
    std::vector<double> counts(p.size());
    Rng rng(seed);
    CompiledSampler sampler(t);
    for (size_t k = 0; k < samples; ++k) {
        BitVector x = compiled ? sampler.sample(rng) : sample_basis(t, rng);
        counts[x.words()[0]] += 1.0;
    }
    double tv = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        tv += std::abs(p[i] - counts[i] / static_cast<double>(samples));
    }
    return tv / 2;
}

Outcome criterion6() {
    const size_t n = 100000;
    std::string detail;
    bool pass = true;
    for (const char *name : {"cube", "hexagonal_prism", "octagonal_prism"}) {
        Colex c = load_colex(testing::data_path(std::string(name) + ".json"));
        double tv = tv_against_dense(c, 61, n, false);
        double tv_compiled = tv_against_dense(c, 62, n, true);
        pass &= tv < 0.05 && tv_compiled < 0.05;
        detail += format("%s(V=%zu) TV %.4f / compiled %.4f; ", name, c.vertex_count, tv, tv_compiled);
    }
    Colex torus = load_colex(testing::data_path("hex_torus_18.json"));
    BitMatrix b = incidence_matrix(torus);
    Tableau omega = css_tableau(b);
    Rng rng(63);
    size_t members = 0;
    for (size_t k = 0; k < n; ++k) {
        members += solve_membership(b, sample_basis(omega, rng)).has_value();
    }
    pass &= members == n;
    detail += format("hex_torus_18 unrotated: %zu/%zu samples in S", members, n);
    return {pass, detail};
}

Outcome criterion7() {
    bool exact_ratio = true;
    for (const NamedColex &nc : testing::small_lattices()) {
        ComparisonReport rep = compare_methods(IsingModel::uniform(nc.colex, 0.4, 1.0), 0.2, 0.9, 7);
        exact_ratio &= rep.bound_ratio == std::exp2(-(static_cast<double>(nc.colex.face_count()) - 2) / 2) &&
                       rep.main.samples == rep.baseline.samples;
    }
    // Matched budgets, repeated: normalized errors on the same epsilon scale.
    // The gated instance keeps the exact overlap well above the baseline's
    // resolution; hex_6x3 is reported to show the regime where the overlap is
    // so small that the baseline mostly returns 0 and its bound exceeds Z.
    const double eps = 0.1, p = 0.9;
    const int runs = 40;
    struct Stats {
        double main = 0, base = 0, abs_log2 = 0;
        ComparisonReport last;
    };
    auto repeat = [&](const IsingModel &m) {
        std::vector<double> main_err, base_err, log_abs_main, log_abs_base;
        Stats st;
        for (int s = 0; s < runs; ++s) {
            st.last = compare_methods(m, eps, p, 500 + s);
            main_err.push_back(st.last.normalized_error_main);
            base_err.push_back(st.last.normalized_error_baseline);
            log_abs_main.push_back(st.last.log_abs_error_main);
            log_abs_base.push_back(st.last.log_abs_error_baseline);
        }
        auto median = [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            return v[v.size() / 2];
        };
        st.main = median(main_err);
        st.base = median(base_err);
        st.abs_log2 = (median(log_abs_main) - median(log_abs_base)) / std::log(2.0);
        return st;
    };
    Stats gated = repeat(random_model(load_colex(testing::data_path("octagonal_prism.json")), 0.3, 9));
    Stats tiny = repeat(random_model(generate_hexagonal(6, 3), 0.3, 9));
    double ratio = gated.main / gated.base;
    bool comparable = gated.main <= eps && gated.base <= eps && ratio >= 0.1 && ratio <= 10.0;
    return {exact_ratio && comparable,
            format("bound ratio exact on %zu lattices: %s; octagonal_prism (F=10) beta=0.3, %d matched runs of K=%llu: "
                   "median normalized error main %.4f vs baseline %.4f (ratio %.2f, need [0.1, 10]), median absolute "
                   "error ratio 2^%.2f vs bound ratio 2^%.0f; info hex_6x3 (F=18): normalized %.4f vs %.4f, absolute "
                   "2^%.2f vs 2^%.0f, old bound exceeds Z: %s",
                   testing::small_lattices().size(), exact_ratio ? "yes" : "no", runs,
                   static_cast<unsigned long long>(gated.last.sample_budget), gated.main, gated.base, ratio,
                   gated.abs_log2, gated.last.bound_ratio_log2, tiny.main, tiny.base, tiny.abs_log2,
                   tiny.last.bound_ratio_log2, tiny.last.old_bound_exceeds_z ? "yes" : "no")};
}

double fit_exponent(const std::vector<double> &x, const std::vector<double> &y) {
    double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Outcome criterion8() {
    std::vector<std::pair<size_t, size_t>> ladder{{4, 3}, {4, 6}, {6, 6}, {8, 9}, {10, 12}, {12, 15}, {14, 15}};
    std::vector<double> vs, t_compiled, t_measure;
    std::string table;
    for (auto [r, c] : ladder) {
        IsingModel m = IsingModel::uniform(generate_hexagonal(r, c), 0.5, 1.0);
        const double V = static_cast<double>(m.vertex_count());
        auto per_sample = [&](SamplerKind kind, uint64_t k) {
            double best = INFINITY;
            for (int rep = 0; rep < 3; ++rep) {
                auto start = Clock::now();
                estimate_expectation(m, plan_with_samples(0.1, 0.9, k), 3 + rep, {1, kind});
                best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
            }
            return best / static_cast<double>(k);
        };
        double tc = per_sample(SamplerKind::kCompiled, 20000);
        double tm = per_sample(SamplerKind::kMeasurement, std::max<uint64_t>(50, static_cast<uint64_t>(4e7 / (V * V * V))));
        vs.push_back(V);
        t_compiled.push_back(tc);
        t_measure.push_back(tm);
        table += format(" V=%.0f:%.2g/%.2g", V, tc, tm);
    }
    double ec = fit_exponent(vs, t_compiled), em = fit_exponent(vs, t_measure);
    return {ec <= 3.5 && em <= 3.5,
            format("fit exponent compiled %.2f, measurement %.2f (bound 3.5); s/sample compiled/measurement:%s", ec, em,
                   table.c_str())};
}

Outcome criterion9() {
    const double eps = 0.1, p = 0.9;
    double worst = 0.0;
    for (const NamedColex &nc : testing::tiny_lattices()) {
        IsingModel m = random_model(nc.colex, 0.7, 17);
        worst = std::max(worst, testing::relative_error(emulate_quantum_expectation(m),
                                                        exact_expectation_codeword_sum(m)));
    }
    IsingModel m = random_model(load_colex(testing::data_path("hex_torus_18.json")), 0.5, 23);
    double exact = exact_expectation_codeword_sum(m);
    SamplePlan plan = plan_samples(eps, p);
    const int runs = 50;
    int hits = 0;
    for (int s = 0; s < runs; ++s) {
        hits += std::abs(emulate_quantum_protocol(m, plan, 7000 + s).expectation.real() - exact) <= eps;
    }
    double need = p - 3.0 * std::sqrt(p * (1 - p) / runs);
    return {hits >= need * runs && worst <= 1e-9,
            format("hex_torus_18: %d/%d runs within eps=%.2f (need >= %.4f); dense vs oracle max relative error %.2e "
                   "on %zu lattices (tol 1e-9)",
                   hits, runs, eps, need, worst, testing::tiny_lattices().size())};
}

Outcome criterion10() {
    using cd = std::complex<double>;
    using M = std::array<cd, 4>;
    auto mul = [](const M &a, const M &b) -> M {
        return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                a[2] * b[1] + a[3] * b[3]};
    };
    const double h = 1.0 / std::sqrt(2.0);
    const cd i(0, 1);
    const M Z{1, 0, 0, -1}, H{h, h, h, -h}, P{1, 0, 0, i}, Pd{1, 0, 0, -i};
    Rng rng(10);
    double worst_a = 0.0, worst_b = 0.0;
    for (int k = 0; k < 1000; ++k) {
        double beta = 2.0 * uniform_unit(rng), j = -2.0 + 4.0 * uniform_unit(rng);
        LocalPhase ph = local_phase(beta * j);
        double norm = std::sqrt(std::exp(2 * beta * j) + std::exp(-2 * beta * j));
        M a{std::exp(beta * j) / norm, std::exp(-beta * j) / norm, std::exp(-beta * j) / norm,
            -std::exp(beta * j) / norm};
        M d{std::exp(-i * ph.theta), 0, 0, std::exp(i * ph.theta)};
        M first = mul(Z, mul(Pd, mul(H, mul(d, mul(H, P)))));
        RealMatrix2 o = diagonalize_A(ph);
        M oc{o[0], o[1], o[2], o[3]}, ot{o[0], o[2], o[1], o[3]};
        M second = mul(ot, mul(Z, oc));
        for (int e = 0; e < 4; ++e) {
            worst_a = std::max(worst_a, std::abs(first[e] - a[e]));
            worst_b = std::max(worst_b, std::abs(second[e] - a[e]));
        }
    }
    return {worst_a <= 1e-12 && worst_b <= 1e-12,
            format("1000 random (beta, J): max entry error Z P^dag H D H P %.2e, O^T Z O %.2e (tol 1e-12)", worst_a,
                   worst_b)};
}

}  // namespace
}  // namespace colorz

int main() {
    using namespace colorz;
    std::vector<Instance> instances = oracle_instances();
    struct Row {
        const char *title;
        std::function<Outcome()> fn;
    };
    std::vector<Row> rows{
        {"cross-oracle identity", [&] { return criterion1(instances); }},
        {"self-orthogonality and counting", criterion2},
        {"high/low temperature closed forms", criterion3},
        {"Z <= gamma / sqrt(2^(F-2))", [&] { return criterion4(instances); }},
        {"estimator coverage", criterion5},
        {"sampler correctness", criterion6},
        {"accuracy separation", criterion7},
        {"runtime scaling", criterion8},
        {"quantum protocol emulation", criterion9},
        {"decomposition reconstructions", criterion10},
    };
    int failures = 0;
    for (size_t k = 0; k < rows.size(); ++k) {
        auto start = Clock::now();
        Outcome o;
        try {
            o = rows[k].fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::printf("%s criterion %zu (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", k + 1, rows[k].title,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(rows.size()) - failures, rows.size());
    return failures == 0 ? 0 : 1;
}
