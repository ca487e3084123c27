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


#include "cli.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "colorz/colex.h"
#include "colorz/errors.h"
#include "colorz/ising.h"
#include "colorz/stabilizer.h"

namespace colorz::cli {
namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char *kSchema = "colorz/result/v1";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<size_t, size_t> parse_dims(const std::string &text) {
    size_t x = text.find('x');
    try {
        if (x == std::string::npos) {
            throw std::invalid_argument("missing x");
        }
        size_t used = 0;
        unsigned long r = std::stoul(text.substr(0, x), &used);
        if (used != x) {
            throw std::invalid_argument("trailing");
        }
        std::string rest = text.substr(x + 1);
        unsigned long c = std::stoul(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument("trailing");
        }
        return {r, c};
    } catch (const std::logic_error &) {
        throw UsageError("expected dimensions of the form ROWSxCOLS, got '" + text + "'");
    }
}

std::vector<double> parse_grid(const std::string &text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) {
        parts.push_back(p);
    }
    try {
        if (parts.size() != 3) {
            throw std::invalid_argument("parts");
        }
        double start = std::stod(parts[0]);
        double stop = std::stod(parts[1]);
        long steps = std::stol(parts[2]);
        if (steps < 1) {
            throw std::invalid_argument("steps");
        }
        std::vector<double> out;
        for (long i = 0; i < steps; i++) {
            out.push_back(steps == 1 ? start : start + (stop - start) * static_cast<double>(i) / (steps - 1));
        }
        return out;
    } catch (const std::logic_error &) {
        throw UsageError("expected --beta-grid START:STOP:STEPS with STEPS >= 1, got '" + text + "'");
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Colex build_lattice(const LatticeSource &src) {
    switch (src.kind) {
        case LatticeSource::Kind::kHexagonal:
            return generate_hexagonal(src.rows, src.cols);
        case LatticeSource::Kind::kSquareOctagon:
            return generate_square_octagon(src.rows, src.cols);
        case LatticeSource::Kind::kFile:
            return load_colex(src.path);
        case LatticeSource::Kind::kNone:
            break;
    }
    throw UsageError("a lattice is required: --hex RxC, --square-octagon RxC or --lattice FILE");
}

struct CouplingsInput {
    std::optional<double> beta;
    std::optional<double> uniform;
    std::vector<double> couplings;
};

CouplingsInput load_couplings(const std::filesystem::path &path) {
    std::string text = read_file(path);
    CouplingsInput in;
    try {
        json doc = json::parse(text);
        if (doc.contains("beta")) {
            in.beta = doc.at("beta").get<double>();
        }
        if (doc.contains("couplings") == doc.contains("uniform")) {
            throw ParseError(path.string() + ": expected exactly one of \"couplings\" or \"uniform\"");
        }
        if (doc.contains("uniform")) {
            in.uniform = doc.at("uniform").get<double>();
        } else {
            in.couplings = doc.at("couplings").get<std::vector<double>>();
        }
    } catch (const json::exception &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return in;
}

json maybe_linear(double log_value) {
    double v = std::exp(log_value);
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json value_pair(double log_value) {
    return json{{"linear", maybe_linear(log_value)}, {"log", std::isfinite(log_value) ? json(log_value) : json(nullptr)}};
}

json signed_value(double log_scale, double factor) {
    json out;
    double v = std::exp(log_scale) * factor;
    out["linear"] = std::isfinite(v) ? json(v) : json(nullptr);
    out["log_abs"] = factor == 0.0 ? json(nullptr) : json(log_scale + std::log(std::abs(factor)));
    out["sign"] = factor < 0 ? -1 : (factor > 0 ? 1 : 0);
    return out;
}

json lattice_json(const LatticeSource &src, const Colex &c) {
    DerivedQuantities d = derived_quantities(c);
    return json{{"source", src.describe()},
                {"V", d.vertices},
                {"E", d.edges},
                {"F", d.faces},
                {"genus", d.genus},
                {"encoded_qubits", d.encoded_qubits}};
}

json model_json(const IsingModel &m, const RunConfig &cfg, const CouplingsInput &ci) {
    json out{{"beta", m.beta()}};
    if (cfg.couplings_file) {
        out["couplings_file"] = cfg.couplings_file->string();
    }
    if (!ci.couplings.empty()) {
        out["couplings"] = std::vector<double>(m.couplings().begin(), m.couplings().end());
    } else {
        out["uniform_j"] = m.couplings().empty() ? 0.0 : m.couplings()[0];
    }
    return out;
}

std::string sampler_name(SamplerKind k) { return k == SamplerKind::kCompiled ? "compiled" : "measurement"; }

json estimate_json(const EstimateResult &r) {
    json out{{"expectation", {{"re", r.expectation.real()}, {"im", r.expectation.imag()}}},
             {"z_estimate", signed_value(r.log_prefactor, r.expectation.real())},
             {"prefactor", value_pair(r.log_prefactor)},
             {"error_bound", value_pair(r.log_error_bound)},
             {"imag_diagnostic", r.imag_diagnostic}};
    return out;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

std::string fmt_log(double log_value) {
    double v = std::exp(log_value);
    if (std::isfinite(v)) {
        return fmt(v);
    }
    return "exp(" + fmt(log_value) + ")";
}

class Runner {
   public:
    Runner(const RunConfig &cfg, std::ostream &out, std::ostream &err) : cfg_(cfg), out_(out), err_(err) {}

    int run() {
        switch (cfg_.command) {
            case Command::kGenerate:
                return generate();
            case Command::kValidate:
                return validate_cmd();
            default:
                return model_commands();
        }
    }

   private:
    void emit(const std::string &text) {
        if (cfg_.output) {
            file_ << text << '\n';
        } else {
            out_ << text << '\n';
        }
    }

    void open_output() {
        if (cfg_.output) {
            file_.open(*cfg_.output);
            if (!file_) {
                throw IoError("cannot write " + cfg_.output->string());
            }
        }
    }

    int generate() {
        if (cfg_.lattice.kind == LatticeSource::Kind::kFile) {
            throw UsageError("generate needs --hex or --square-octagon");
        }
        Colex c = build_lattice(cfg_.lattice);
        open_output();
        emit(colex_to_json(c));
        DerivedQuantities d = derived_quantities(c);
        err_ << "generated " << cfg_.lattice.describe() << ": V=" << d.vertices << " E=" << d.edges
             << " F=" << d.faces << " genus=" << d.genus << '\n';
        return kOk;
    }

    int validate_cmd() {
        Colex c;
        if (cfg_.lattice.kind == LatticeSource::Kind::kFile) {
            c = colex_from_json(read_file(cfg_.lattice.path));
        } else {
            c = build_lattice(cfg_.lattice);
        }
        ValidationReport report = validate(c);
        json doc{{"schema", kSchema}, {"command", "validate"}};
        if (report.ok()) {
            doc["lattice"] = lattice_json(cfg_.lattice, c);
        } else {
            doc["lattice"] = json{{"source", cfg_.lattice.describe()}};
        }
        doc["ok"] = report.ok();
        json violations = json::array();
        for (const Violation &v : report.violations) {
            violations.push_back(
                json{{"kind", std::string(violation_name(v.kind))}, {"message", v.message}, {"indices", v.indices}});
        }
        doc["violations"] = violations;
        open_output();
        emit(doc.dump());
        if (!report.ok()) {
            err_ << cfg_.lattice.describe() << " is not a valid colex:\n" << report.to_string();
            return kValidation;
        }
        err_ << cfg_.lattice.describe() << " is a valid colex\n";
        return kOk;
    }

    int model_commands() {
        Colex c = build_lattice(cfg_.lattice);
        CouplingsInput ci;
        if (cfg_.couplings_file) {
            ci = load_couplings(*cfg_.couplings_file);
        }
        std::vector<double> betas = cfg_.betas;
        if (!cfg_.beta_from_flag) {
            if (!ci.beta) {
                throw UsageError("--beta, --beta-grid or a couplings file with \"beta\" is required");
            }
            betas = {*ci.beta};
        }
        std::vector<double> couplings = ci.couplings;
        if (couplings.empty()) {
            couplings.assign(c.vertex_count, ci.uniform.value_or(cfg_.uniform_j.value_or(1.0)));
        }
        open_output();
        for (double beta : betas) {
            IsingModel m(c, beta, couplings);
            auto start = Clock::now();
            json doc{{"schema", kSchema},
                     {"command", command_name()},
                     {"lattice", lattice_json(cfg_.lattice, c)},
                     {"model", model_json(m, cfg_, ci)}};
            switch (cfg_.command) {
                case Command::kExact:
                    exact(m, doc);
                    break;
                case Command::kEstimate:
                case Command::kQsim:
                    estimate(m, doc);
                    break;
                case Command::kCompare:
                    compare(m, doc);
                    break;
                default:
                    break;
            }
            std::chrono::duration<double> wall = Clock::now() - start;
            if (cfg_.timing) {
                doc["wall_time_s"] = wall.count();
            }
            emit(doc.dump());
            err_ << "  [" << fmt(wall.count()) << " s]\n";
        }
        return kOk;
    }

    std::string command_name() const {
        switch (cfg_.command) {
            case Command::kExact:
                return "exact";
            case Command::kEstimate:
                return "estimate";
            case Command::kQsim:
                return "qsim";
            case Command::kCompare:
                return "compare";
            case Command::kGenerate:
                return "generate";
            case Command::kValidate:
                return "validate";
        }
        return "";
    }

    void exact(const IsingModel &m, json &doc) {
        const size_t cap = cfg_.enumeration_cap;
        double log_z = log_exact_Z_spin_enumeration(m, cap);
        double log_e = log_exact_expectation_codeword_sum(m, cap);
        double log_pref = log_expectation_prefactor(m);
        double log_gamma = gamma(m).log_value;
        double log_overlap = log_exact_overlap(m, cap);
        doc["method"] = "exact";
        doc["result"] = json{{"z", value_pair(log_z)},
                             {"z_via_expectation", value_pair(log_pref + log_e)},
                             {"z_via_overlap", value_pair(log_gamma + log_overlap)},
                             {"expectation", std::exp(log_e)},
                             {"overlap", value_pair(log_overlap)},
                             {"gamma", value_pair(log_gamma)},
                             {"bound", value_pair(log_pref)}};
        err_ << "exact " << cfg_.lattice.describe() << " beta=" << fmt(m.beta()) << ": Z = " << fmt_log(log_z)
             << ", <A> = " << fmt(std::exp(log_e)) << ", bound " << fmt_log(log_pref) << '\n';
    }

    SamplePlan plan() const {
        return cfg_.samples ? plan_with_samples(cfg_.epsilon, cfg_.confidence, *cfg_.samples)
                            : plan_samples(cfg_.epsilon, cfg_.confidence);
    }

    void estimate(const IsingModel &m, json &doc) {
        SamplePlan p = plan();
        EstimateOptions opts{cfg_.threads, cfg_.sampler};
        EstimateResult r = cfg_.command == Command::kQsim ? emulate_quantum_protocol(m, p, cfg_.seed, opts, cfg_.qubit_cap)
                                                          : estimate_expectation(m, p, cfg_.seed, opts);
        doc["method"] = r.method;
        doc["plan"] = json{{"epsilon", p.epsilon}, {"confidence", p.confidence}, {"samples", p.samples}};
        doc["seed"] = cfg_.seed;
        doc["threads"] = cfg_.threads;
        if (cfg_.command == Command::kEstimate) {
            doc["sampler"] = sampler_name(cfg_.sampler);
        }
        doc["samples"] = r.samples;
        doc["result"] = estimate_json(r);
        err_ << command_name() << " " << cfg_.lattice.describe() << " beta=" << fmt(m.beta())
             << ": <A> ~ " << fmt(r.expectation.real()) << " +/- " << fmt(p.epsilon) << ", Z ~ "
             << fmt(r.z_estimate) << " +/- " << fmt_log(r.log_error_bound) << " (p=" << fmt(p.confidence)
             << ", K=" << r.samples << ", seed " << cfg_.seed << ")\n";
    }

    void compare(const IsingModel &m, json &doc) {
        EstimateOptions opts{cfg_.threads, cfg_.sampler};
        ComparisonReport rep = compare_methods(m, cfg_.epsilon, cfg_.confidence, cfg_.seed, opts, cfg_.enumeration_cap);
        doc["method"] = "compare";
        doc["plan"] = json{{"epsilon", rep.epsilon}, {"confidence", rep.confidence}, {"sample_budget", rep.sample_budget}};
        doc["seed"] = cfg_.seed;
        doc["threads"] = cfg_.threads;
        doc["samples"] = rep.sample_budget;
        json main = estimate_json(rep.main);
        main["method"] = rep.main.method;
        main["abs_error"] = value_pair(rep.log_abs_error_main);
        main["normalized_error"] = rep.normalized_error_main;
        json base = estimate_json(rep.baseline);
        base["method"] = rep.baseline.method;
        base["abs_error"] = value_pair(rep.log_abs_error_baseline);
        base["normalized_error"] = rep.normalized_error_baseline;
        doc["result"] = json{{"exact",
                              {{"z", value_pair(rep.log_z_exact)},
                               {"expectation", rep.expectation_exact},
                               {"overlap", value_pair(rep.log_overlap_exact)}}},
                             {"main", main},
                             {"baseline", base},
                             {"bound_new", value_pair(rep.log_bound_new)},
                             {"bound_old", value_pair(rep.log_bound_old)},
                             {"bound_ratio", rep.bound_ratio},
                             {"bound_ratio_log2", rep.bound_ratio_log2},
                             {"old_bound_exceeds_z", rep.old_bound_exceeds_z},
                             {"new_bound_exceeds_z", rep.new_bound_exceeds_z}};
        err_ << "compare " << cfg_.lattice.describe() << " beta=" << fmt(m.beta()) << ": Z = "
             << fmt_log(rep.log_z_exact) << ", new bound " << fmt_log(rep.log_bound_new) << ", old bound "
             << fmt_log(rep.log_bound_old) << ", ratio 2^" << fmt(rep.bound_ratio_log2) << ", errors "
             << fmt_log(rep.log_abs_error_main) << " vs " << fmt_log(rep.log_abs_error_baseline) << '\n';
    }

    const RunConfig &cfg_;
    std::ostream &out_;
    std::ostream &err_;
    std::ofstream file_;
};

uint64_t random_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

std::string LatticeSource::describe() const {
    switch (kind) {
        case Kind::kHexagonal:
            return "hex " + std::to_string(rows) + "x" + std::to_string(cols);
        case Kind::kSquareOctagon:
            return "square-octagon " + std::to_string(rows) + "x" + std::to_string(cols);
        case Kind::kFile:
            return path.string();
        case Kind::kNone:
            break;
    }
    return "none";
}

std::optional<RunConfig> parse_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                                    int &exit_code) {
    CLI::App app{"colorz: color-code Ising partition functions via stabilizer sampling", "colorz"};
    app.require_subcommand(1, 1);

    RunConfig cfg;
    std::string hex, square_octagon, lattice_file, grid, couplings_file, output, sampler = "compiled";
    std::optional<double> beta, uniform_j;
    std::optional<uint64_t> seed, samples;

    struct Flags {
        bool model = false;
        bool accuracy = false;
        bool sampler = false;
        bool enum_cap = false;
        bool qubit_cap = false;
    };
    auto add = [&](const char *name, const char *about, Command cmd, Flags f) {
        CLI::App *sub = app.add_subcommand(name, about);
        sub->callback([&cfg, cmd] { cfg.command = cmd; });
        auto *h = sub->add_option("--hex", hex, "hexagonal torus, ROWSxCOLS unit rows and columns");
        auto *s = sub->add_option("--square-octagon", square_octagon, "4-8 torus, ROWSxCOLS cells");
        auto *l = sub->add_option("--lattice", lattice_file, "colex JSON file");
        h->excludes(s)->excludes(l);
        s->excludes(l);
        sub->add_option("--output,-o", output, "write documents to FILE instead of stdout");
        if (f.model) {
            auto *b = sub->add_option("--beta", beta, "inverse temperature");
            auto *g = sub->add_option("--beta-grid", grid, "START:STOP:STEPS, one document per point");
            b->excludes(g);
            auto *u = sub->add_option("--uniform-j", uniform_j, "uniform coupling J (default 1)");
            auto *c = sub->add_option("--couplings", couplings_file,
                                      "JSON file {\"beta\":..,\"couplings\":[..]} or {\"beta\":..,\"uniform\":..}");
            u->excludes(c);
            sub->add_flag("--timing", cfg.timing, "include wall time in the output document");
        }
        if (f.accuracy) {
            sub->add_option("--epsilon", cfg.epsilon, "additive accuracy on <A> (default 0.1)");
            sub->add_option("--confidence", cfg.confidence, "success probability (default 0.95)");
            sub->add_option("--seed", seed, "64-bit seed (default random, always echoed)");
            sub->add_option("--threads", cfg.threads, "worker threads (default 1)")->check(CLI::PositiveNumber);
            if (cmd != Command::kCompare) {
                sub->add_option("--samples", samples, "override the planned sample count");
            }
        }
        if (f.sampler) {
            sub->add_option("--sampler", sampler, "compiled or measurement")
                ->check(CLI::IsMember({"compiled", "measurement"}));
        }
        if (f.enum_cap) {
            sub->add_option("--enum-cap", cfg.enumeration_cap, "enumeration cap (log2 of terms, default 24)");
        }
        if (f.qubit_cap) {
            sub->add_option("--qubit-cap", cfg.qubit_cap, "dense statevector qubit cap (default 26)");
        }
    };
    add("generate", "write a generated lattice as colex JSON", Command::kGenerate, {});
    add("validate", "check the colex invariants of a lattice", Command::kValidate, {});
    add("exact", "exact Z by spin enumeration and codeword sum", Command::kExact, {true, false, false, true, false});
    add("estimate", "stabilizer-sampling estimate of Z", Command::kEstimate, {true, true, true, false, false});
    add("qsim", "dense emulation of the quantum protocol", Command::kQsim, {true, true, false, false, true});
    add("compare", "main estimator vs overlap baseline against the exact value", Command::kCompare,
        {true, true, true, true, false});

    std::vector<const char *> argv{"colorz"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        exit_code = kOk;
        return std::nullopt;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        exit_code = kOk;
        return std::nullopt;
    } catch (const CLI::ParseError &e) {
        err << "colorz: " << e.what() << "\n";
        exit_code = kUsage;
        return std::nullopt;
    }

    try {
        if (!hex.empty()) {
            auto [r, c] = parse_dims(hex);
            cfg.lattice = {LatticeSource::Kind::kHexagonal, r, c, {}};
        } else if (!square_octagon.empty()) {
            auto [r, c] = parse_dims(square_octagon);
            cfg.lattice = {LatticeSource::Kind::kSquareOctagon, r, c, {}};
        } else if (!lattice_file.empty()) {
            cfg.lattice = {LatticeSource::Kind::kFile, 0, 0, lattice_file};
        } else {
            throw UsageError("a lattice is required: --hex RxC, --square-octagon RxC or --lattice FILE");
        }
        if (beta) {
            cfg.betas = {*beta};
            cfg.beta_from_flag = true;
        } else if (!grid.empty()) {
            cfg.betas = parse_grid(grid);
            cfg.beta_from_flag = true;
        }
    } catch (const UsageError &e) {
        err << "colorz: " << e.what() << "\n";
        exit_code = kUsage;
        return std::nullopt;
    }
    cfg.uniform_j = uniform_j;
    if (!couplings_file.empty()) {
        cfg.couplings_file = couplings_file;
    }
    if (!output.empty()) {
        cfg.output = output;
    }
    cfg.samples = samples;
    cfg.sampler = sampler == "measurement" ? SamplerKind::kMeasurement : SamplerKind::kCompiled;
    cfg.seed = seed ? *seed : random_seed();
    exit_code = kOk;
    return cfg;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        return Runner(config, out, err).run();
    } catch (const UsageError &e) {
        err << "colorz: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError &e) {
        err << "colorz: " << e.what() << "\n";
        return kFileNotFound;
    } catch (const ParseError &e) {
        err << "colorz: " << e.what() << "\n";
        return kParse;
    } catch (const ValidationError &e) {
        err << "colorz: " << e.what() << "\n";
        return kValidation;
    } catch (const NotSelfOrthogonalError &e) {
        err << "colorz: " << e.what() << "\n";
        return kValidation;
    } catch (const CapExceededError &e) {
        err << "colorz: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const DomainError &e) {
        err << "colorz: " << e.what() << "\n";
        return kDomain;
    } catch (const std::exception &e) {
        err << "colorz: internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int main_with_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    int code = kOk;
    std::optional<RunConfig> cfg = parse_args(args, out, err, code);
    if (!cfg) {
        return code;
    }
    return run(*cfg, out, err);
}

}  // namespace colorz::cli
