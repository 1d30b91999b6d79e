// Copyright 2026 The cavity-dj Authors
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

#include "cavitydj_cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include "CLI11.hpp"

#include "cavitydj/errors.hpp"
#include "cavitydj/dynamics.hpp"
#include "cavitydj/feasibility.hpp"
#include "cavitydj/protocols.hpp"

namespace cavitydj::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string mode = "ideal";
    std::size_t n = 1;
    std::string oracle = "constant0";
    double alpha = kDefaultAlpha;
    double tail_epsilon = kDefaultTailEpsilon;
    std::optional<std::size_t> fock_n_max;
    std::optional<std::uint64_t> seed;
    std::size_t shots = 0;
    std::string format = "json";
};

struct CatConfig {
    double alpha = kDefaultAlpha;
    double tail_epsilon = kDefaultTailEpsilon;
    std::optional<std::size_t> fock_n_max;
    std::string detect = "f";
    std::optional<std::uint64_t> seed;
    std::size_t shots = 0;
    std::string format = "json";
};

struct PrepConfig {
    std::string atom = "nominal";
    std::string format = "json";
};

struct FeasibilityConfig {
    std::string phi = "pi";
    std::size_t n = 1;
    double g_hz = 25e3;
    double delta_hz = 100e3;
    double radiative_time = 1e-2;
    double damping_time = 1e-2;
    std::string format = "json";
};

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

std::string bitstring(std::size_t x, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t k = 0; k < n; ++k) {
        if ((x >> (n - 1 - k)) & 1) {
            s[k] = '1';
        }
    }
    return s;
}

std::uint64_t parse_seed(const std::string &text) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw UsageError("CAVITY_DJ_SEED is not an unsigned 64-bit integer: " + text);
    }
    return v;
}

std::optional<std::uint64_t> resolve_seed(const std::optional<std::uint64_t> &flag,
                                          const std::optional<std::string> &env) {
    if (flag) {
        return flag;
    }
    if (env && !env->empty()) {
        return parse_seed(*env);
    }
    return std::nullopt;
}

OracleSpec resolve_oracle(const RunConfig &cfg, bool n_given, std::optional<std::uint64_t> seed) {
    if (cfg.oracle == "constant0") {
        return OracleSpec::constant(cfg.n, false);
    }
    if (cfg.oracle == "constant1") {
        return OracleSpec::constant(cfg.n, true);
    }
    if (cfg.oracle == "parity") {
        return OracleSpec::parity(cfg.n);
    }
    if (cfg.oracle == "random-balanced") {
        if (!seed) {
            throw UsageError("oracle random-balanced requires --seed or CAVITY_DJ_SEED");
        }
        return OracleSpec::random_balanced(cfg.n, *seed);
    }
    OracleSpec spec = parse_oracle_file(cfg.oracle);
    if (n_given && spec.n() != cfg.n) {
        throw UsageError("--n " + std::to_string(cfg.n) + " disagrees with oracle file n = " +
                         std::to_string(spec.n()));
    }
    return spec;
}

ExecutionMode resolve_mode(const RunConfig &cfg) {
    const auto kind = parse_mode(cfg.mode);
    if (!kind) {
        throw UsageError("unknown mode '" + cfg.mode + "'");
    }
    switch (*kind) {
    case ModeKind::IdealGate:
        return ExecutionMode::ideal_gate();
    case ModeKind::TwoLevelFock:
        return ExecutionMode::two_level_fock();
    case ModeKind::ThreeLevelCoherent:
        break;
    }
    if (cfg.fock_n_max) {
        return ExecutionMode::three_level_coherent(
            cfg.alpha, FockTruncation{*cfg.fock_n_max, cfg.tail_epsilon});
    }
    return ExecutionMode::three_level_coherent(cfg.alpha, cfg.tail_epsilon);
}

// Explicit --fock-n-max wins over the tail criterion; it is still checked against it.
FockTruncation resolve_truncation(double alpha, double tail_epsilon,
                                  const std::optional<std::size_t> &n_max) {
    if (n_max) {
        FockTruncation t{*n_max, tail_epsilon};
        check_truncation(alpha, t);
        return t;
    }
    return choose_truncation(alpha, tail_epsilon);
}

ordered_json run_report_json(const std::string &command, const RunConfig &cfg,
                             const OracleSpec &oracle, const RunReport &r) {
    const bool coherent = r.mode == ModeKind::ThreeLevelCoherent;
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["command"] = command;

    ordered_json c;
    c["mode"] = std::string(to_string(r.mode));
    c["n"] = oracle.n();
    c["oracle"] = cfg.oracle;
    if (coherent) {
        c["alpha"] = cfg.alpha;
        c["tail_epsilon"] = cfg.tail_epsilon;
        c["fock_n_max"] = r.truncation->n_max;
    }
    c["seed"] = r.seed;
    c["shots"] = cfg.shots;
    c["format"] = cfg.format;
    j["config"] = std::move(c);

    ordered_json o;
    o["n"] = oracle.n();
    o["class"] = std::string(to_string(oracle.oracle_class()));
    o["ones"] = r.oracle_ones;
    o["truth_table"] = oracle.bits();
    o["cavity_realizable"] = r.oracle_cavity_realizable;
    o["path"] = std::string(to_string(r.oracle_path));
    if (r.phi) {
        o["phi"] = *r.phi;
    } else {
        o["phi"] = nullptr;
    }
    j["oracle"] = std::move(o);

    ordered_json res;
    res["p_all_zeros"] = r.p_all_zeros;
    res["decision"] = std::string(to_string(r.decision));
    res["register_cavity_purity"] = r.register_cavity_purity;
    res["cavity_final_fidelity_vs_expected"] = r.cavity_final_fidelity_vs_expected;
    res["inactive_level_population"] = r.inactive_level_population;
    res["sampled_outcome"] = bitstring(r.sampled_outcome, r.n);
    if (coherent) {
        res["cat_prep_attempts"] = r.cat_prep_attempts;
    }
    j["result"] = std::move(res);

    ordered_json dist = ordered_json::object();
    for (std::size_t x = 0; x < r.distribution.size(); ++x) {
        if (r.distribution[x] > 1e-12) {
            dist[bitstring(x, r.n)] = r.distribution[x];
        }
    }
    j["distribution"] = std::move(dist);

    if (cfg.shots > 0) {
        const auto counts = sample_counts(r.distribution, r.seed, cfg.shots);
        ordered_json hist = ordered_json::object();
        for (std::size_t x = 0; x < counts.size(); ++x) {
            if (counts[x]) {
                hist[bitstring(x, r.n)] = counts[x];
            }
        }
        j["counts"] = std::move(hist);
    }
    return j;
}

std::string render(const ordered_json &j, const std::string &format) {
    return format == "csv" ? write_csv(j) : write_json(j);
}

int cmd_run(const std::string &command, const RunConfig &cfg, bool n_given,
            const std::optional<std::string> &env_seed, std::ostream &out) {
    const auto seed = resolve_seed(cfg.seed, env_seed);
    const OracleSpec oracle = resolve_oracle(cfg, n_given, seed);
    const ExecutionMode mode = resolve_mode(cfg);
    const std::uint64_t s = seed.value_or(0);
    RunReport report = command == "run-deutsch" ? run_deutsch(oracle, mode, s)
                                                : run_deutsch_jozsa(oracle, mode, s);
    out << render(run_report_json(command, cfg, oracle, report), cfg.format);
    return kExitOk;
}

ordered_json amplitudes_json(const StateVector &v) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < v.size(); ++i) {
        arr.push_back(ordered_json::array({v[i].real(), v[i].imag()}));
    }
    return arr;
}

int cmd_prepare(const PrepConfig &cfg, std::ostream &out) {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    std::vector<Complex> atom(2);
    if (cfg.atom == "nominal") {
        atom = {Complex{0.0, -kInvSqrt2}, kInvSqrt2};
    } else if (cfg.atom == "e") {
        atom = {Complex{0.0, -1.0}, 0.0};
    } else if (cfg.atom == "f") {
        atom = {0.0, 1.0};
    } else {
        throw UsageError("unknown atom state '" + cfg.atom + "'");
    }
    const auto prep = jc_prepare_cavity(StateVector::qudit(atom));
    const StateVector minus = StateVector::qudit({kInvSqrt2, -kInvSqrt2});

    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "prepare-cavity";
    ordered_json c;
    c["atom"] = cfg.atom;
    c["g_tau"] = "pi/2";
    c["cavity_dim"] = prep.cavity.size();
    c["format"] = cfg.format;
    j["config"] = std::move(c);
    ordered_json r;
    r["atom_cavity_purity"] = prep.atom_cavity_purity;
    r["fidelity_vs_minus"] = fidelity_up_to_phase(prep.cavity, minus);
    r["cavity_amplitudes"] = amplitudes_json(prep.cavity);
    r["joint_amplitudes"] = amplitudes_json(prep.joint);
    j["result"] = std::move(r);
    out << render(j, cfg.format);
    return kExitOk;
}

int cmd_cat(const CatConfig &cfg, const std::optional<std::string> &env_seed, std::ostream &out) {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    if (cfg.detect != "f" && cfg.detect != "g") {
        throw UsageError("--detect must be f or g");
    }
    const Complex c_g = kInvSqrt2;
    const Complex c_f = (cfg.detect == "f" ? Complex{0.0, 1.0} : Complex{0.0, -1.0}) * kInvSqrt2;
    const std::uint64_t seed = resolve_seed(cfg.seed, env_seed).value_or(0);
    const FockTruncation trunc = resolve_truncation(cfg.alpha, cfg.tail_epsilon, cfg.fock_n_max);
    const auto prep = prepare_odd_cat(c_f, c_g, cfg.alpha, seed, trunc);
    const CatState odd{CatParity::Odd, cfg.alpha, prep.truncation};

    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "cat-prep";
    ordered_json c;
    c["alpha"] = cfg.alpha;
    c["tail_epsilon"] = cfg.tail_epsilon;
    c["fock_n_max"] = trunc.n_max;
    c["detect"] = cfg.detect;
    c["c_f"] = ordered_json::array({c_f.real(), c_f.imag()});
    c["c_g"] = ordered_json::array({c_g.real(), c_g.imag()});
    c["seed"] = seed;
    c["shots"] = cfg.shots;
    c["format"] = cfg.format;
    j["config"] = std::move(c);

    auto level = [](std::size_t l) { return l == three_level::f ? "f" : "g"; };
    ordered_json r;
    r["target_level"] = level(prep.target_level);
    r["detected_level"] = level(prep.detected_level);
    r["status"] = prep.success ? "ok" : "postselection failed";
    r["postselect_probability"] = prep.postselect_probability;
    r["fidelity_vs_odd_cat"] = prep.fidelity_vs_odd_cat;
    r["cat_normalization"] = odd.normalization();
    r["coherent_overlap"] = std::exp(-2.0 * cfg.alpha * cfg.alpha);
    j["result"] = std::move(r);

    if (cfg.shots > 0) {
        const auto sample = sample_postselection(c_f, c_g, cfg.alpha, seed, cfg.shots, trunc);
        ordered_json s;
        s["shots"] = sample.shots;
        s["hits"] = sample.hits;
        s["empirical_rate"] = sample.empirical_rate;
        s["analytic_probability"] = sample.analytic_probability;
        j["sampling"] = std::move(s);
    }
    out << render(j, cfg.format);
    return kExitOk;
}

int cmd_feasibility(const FeasibilityConfig &cfg, std::ostream &out) {
    HardwareParams hw;
    hw.g = 2.0 * std::numbers::pi * cfg.g_hz;
    hw.delta = 2.0 * std::numbers::pi * cfg.delta_hz;
    hw.radiative_time = cfg.radiative_time;
    hw.cavity_damping_time = cfg.damping_time;
    const double phi = parse_angle(cfg.phi);
    const auto rep = feasibility_report(hw, phi, cfg.n);

    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "feasibility";
    ordered_json c;
    c["phi"] = cfg.phi;
    c["n"] = cfg.n;
    c["g_hz"] = cfg.g_hz;
    c["delta_hz"] = cfg.delta_hz;
    c["radiative_time"] = cfg.radiative_time;
    c["damping_time"] = cfg.damping_time;
    c["format"] = cfg.format;
    j["config"] = std::move(c);
    ordered_json r;
    r["phi"] = rep.phi;
    r["tau_per_atom"] = rep.tau_per_atom;
    r["prep_pulse_time"] = rep.prep_pulse_time;
    r["n_atoms"] = rep.n_atoms;
    r["total_time"] = rep.total_time;
    r["radiative_margin"] = rep.radiative_margin;
    r["damping_margin"] = rep.damping_margin;
    r["verdict"] = std::string(to_string(rep.verdict));
    r["max_feasible_atoms"] = phi > 0.0 ? max_feasible_atoms(hw, phi) : 0;
    j["result"] = std::move(r);
    out << render(j, cfg.format);
    return kExitOk;
}

void add_run_options(CLI::App *sub, RunConfig &cfg, bool with_n) {
    if (with_n) {
        sub->add_option("--n", cfg.n, "Number of input bits / atoms")->check(CLI::Range(1, 20));
    }
    sub->add_option("--oracle", cfg.oracle,
                    "constant0 | constant1 | parity | random-balanced | path to oracle file");
    sub->add_option("--mode", cfg.mode, "ideal | two-level | three-level");
    sub->add_option("--alpha", cfg.alpha, "Cat-state amplitude (three-level mode)");
    sub->add_option("--tail-epsilon", cfg.tail_epsilon, "Admissible Fock tail mass");
    sub->add_option("--fock-n-max", cfg.fock_n_max,
                    "Explicit photon-number cutoff (default: smallest meeting the tail bound)");
    sub->add_option("--seed", cfg.seed, "RNG seed (default: CAVITY_DJ_SEED or 0)");
    sub->add_option("--shots", cfg.shots, "Sampled register measurements (0 = analytic only)");
    sub->add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        std::optional<std::string> env_seed) {
    CLI::App app{"Cavity QED Deutsch / Deutsch-Jozsa simulator", "cavity-dj"};
    app.require_subcommand(1);

    RunConfig deutsch_cfg;
    RunConfig dj_cfg;
    PrepConfig prep_cfg;
    CatConfig cat_cfg;
    FeasibilityConfig feas_cfg;

    auto *deutsch = app.add_subcommand("run-deutsch", "One-bit Deutsch run");
    add_run_options(deutsch, deutsch_cfg, false);
    auto *dj = app.add_subcommand("run-dj", "n-bit Deutsch-Jozsa run");
    add_run_options(dj, dj_cfg, true);

    auto *prep = app.add_subcommand("prepare-cavity", "Resonant preparation of (|0>-|1>)/sqrt 2");
    prep->add_option("--atom", prep_cfg.atom, "nominal | e | f");
    prep->add_option("--format", prep_cfg.format)->check(CLI::IsMember({"json", "csv"}));

    auto *cat = app.add_subcommand("cat-prep", "Odd cat preparation by post-selection");
    cat->add_option("--alpha", cat_cfg.alpha, "Coherent amplitude");
    cat->add_option("--tail-epsilon", cat_cfg.tail_epsilon, "Admissible Fock tail mass");
    cat->add_option("--fock-n-max", cat_cfg.fock_n_max,
                    "Explicit photon-number cutoff (default: smallest meeting the tail bound)");
    cat->add_option("--detect", cat_cfg.detect, "Heralding level: f or g");
    cat->add_option("--seed", cat_cfg.seed, "RNG seed (default: CAVITY_DJ_SEED or 0)");
    cat->add_option("--shots", cat_cfg.shots, "Repeated detections for the empirical rate");
    cat->add_option("--format", cat_cfg.format)->check(CLI::IsMember({"json", "csv"}));

    auto *feas = app.add_subcommand("feasibility", "Timing budget against lifetimes");
    feas->add_option("--phi", feas_cfg.phi, "Dispersive phase: pi, 2pi, pi/2 or radians");
    feas->add_option("--n", feas_cfg.n, "Number of atoms")->check(CLI::PositiveNumber);
    feas->add_option("--g-hz", feas_cfg.g_hz, "Coupling g / 2pi in Hz");
    feas->add_option("--delta-hz", feas_cfg.delta_hz, "Detuning / 2pi in Hz");
    feas->add_option("--radiative-time", feas_cfg.radiative_time, "Radiative lifetime in s");
    feas->add_option("--damping-time", feas_cfg.damping_time, "Cavity damping time in s");
    feas->add_option("--format", feas_cfg.format)->check(CLI::IsMember({"json", "csv"}));

    std::vector<const char *> argv;
    argv.push_back("cavity-dj");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "cavity-dj: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (deutsch->parsed()) {
            return cmd_run("run-deutsch", deutsch_cfg, false, env_seed, out);
        }
        if (dj->parsed()) {
            return cmd_run("run-dj", dj_cfg, dj->count("--n") > 0, env_seed, out);
        }
        if (prep->parsed()) {
            return cmd_prepare(prep_cfg, out);
        }
        if (cat->parsed()) {
            return cmd_cat(cat_cfg, env_seed, out);
        }
        return cmd_feasibility(feas_cfg, out);
    } catch (const OracleError &e) {
        err << "cavity-dj: " << e.what() << "\n";
        return kExitOracle;
    } catch (const NumericInvariantError &e) {
        err << "cavity-dj: numeric invariant failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument &e) {
        err << "cavity-dj: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace cavitydj::cli
