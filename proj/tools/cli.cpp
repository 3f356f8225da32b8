// Copyright 2026 The chanwit Authors
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

#include "cli.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "chanwit/channels.hpp"
#include "chanwit/numfmt.hpp"
#include "chanwit/protocol.hpp"
#include "chanwit/robustness.hpp"
#include "chanwit/selftest.hpp"
#include "chanwit/witness.hpp"
#include "json.hpp"

namespace chanwit::cli {

namespace {

// Agreement required between the analytic and Kraus routes in `expect`.
constexpr double kRouteTolerance = 1e-8;

struct InvariantFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string gate = "cnot";
    std::string noise = "depolarising";
    std::string mode = "before";
    std::string format;
    std::string out_path;
    double q1 = 0;
    double q2 = 0;
    std::optional<double> beta;
    std::size_t restarts = 200;
    std::size_t grid = 21;
    std::size_t shots = 100000;
    std::uint64_t seed = 0;
};

const std::vector<std::string> kGateChoices{"cnot", "cz"};
const std::vector<std::string> kNoiseChoices{"depolarising", "dephasing", "bitflip", "amplitude_damping"};
const std::vector<std::string> kModeChoices{"before", "after", "equal"};

void add_gate(CLI::App *cmd, Options &o) {
    cmd->add_option("--gate", o.gate, "Target gate")
        ->required()
        ->transform(CLI::IsMember(kGateChoices, CLI::ignore_case));
}

void add_noise(CLI::App *cmd, Options &o) {
    cmd->add_option("--noise", o.noise, "Noise kind")->required()->transform(CLI::IsMember(kNoiseChoices));
}

void add_strengths(CLI::App *cmd, Options &o) {
    cmd->add_option("--q1,--gamma1", o.q1, "Pre-gate noise strength (q1 or gamma1)")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--q2,--gamma2", o.q2, "Post-gate noise strength (q2 or gamma2)")->check(CLI::Range(0.0, 1.0));
}

void add_out(CLI::App *cmd, Options &o) { cmd->add_option("--out", o.out_path, "Output file (default: stdout)"); }

void emit(const std::string &text, const Options &o, std::ostream &out) {
    if (o.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::invalid_argument("--out: cannot open '" + o.out_path + "' for writing");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("--out: write to '" + o.out_path + "' failed");
    }
}

int cmd_witness(const Options &o, std::ostream &out) {
    auto gate = parse_gate(o.gate);
    double beta = o.beta ? *o.beta : beta_sru(gate_matrix(gate), {.restarts = o.restarts, .seed = o.seed});
    auto w = build_witness(gate, beta);
    auto d = pauli_decompose(w);
    auto settings = minimal_settings(d);
    if (o.format == "json") {
        nlohmann::json doc{
            {"gate", gate_label(gate)},
            {"beta", round_sig(beta)},
            {"terms", nlohmann::json::parse(decomposition_to_json(d))},
            {"settings", nlohmann::json::parse(settings_to_json(settings))},
        };
        emit(doc.dump(2) + "\n", o, out);
        return kExitOk;
    }
    std::string text = fmt::format("gate {}\nbeta {}\nterms {}\n", gate_label(gate), format_sig(beta), d.terms.size());
    for (const auto &t : d.terms) {
        text += fmt::format("  {:>7} {}\n", t.coeff_text(), t.string.str());
    }
    text += fmt::format("settings {}\n", settings.size());
    for (const auto &s : settings) {
        text += fmt::format("  {}\n", s.str());
    }
    emit(text, o, out);
    return kExitOk;
}

int cmd_beta(const Options &o, std::ostream &out) {
    auto gate = parse_gate(o.gate);
    double beta = beta_sru(gate_matrix(gate), {.restarts = o.restarts, .seed = o.seed});
    emit(format_sig(beta) + "\n", o, out);
    return kExitOk;
}

int cmd_expect(const Options &o, std::ostream &out) {
    auto gate = parse_gate(o.gate);
    auto kind = parse_noise(o.noise);
    auto w = build_witness(gate, 0.5);
    double analytic = closed_form(gate, kind, o.q1, o.q2);
    double numeric = expectation(w, noisy_gate(gate, {kind, o.q1, o.q2}));
    double diff = analytic - numeric;
    std::string text;
    if (o.format == "json") {
        nlohmann::json doc{{"gate", gate_label(gate)},       {"noise", noise_label(kind)},
                           {"q1", round_sig(o.q1)},          {"q2", round_sig(o.q2)},
                           {"closed_form", round_sig(analytic)}, {"numeric", round_sig(numeric)},
                           {"difference", round_sig(diff, 4)},  {"detected", numeric < 0.0}};
        text = doc.dump(2) + "\n";
    } else {
        text = fmt::format("closed_form {}\nnumeric {}\ndifference {:.3e}\ndetected {}\n", format_sig(analytic),
                           format_sig(numeric), diff, numeric < 0.0 ? "true" : "false");
    }
    emit(text, o, out);
    if (std::abs(diff) > kRouteTolerance) {
        throw InvariantFailure(fmt::format("closed form and Kraus expectation differ by {:.3e}", diff));
    }
    return kExitOk;
}

int cmd_threshold(const Options &o, std::ostream &out) {
    auto gate = parse_gate(o.gate);
    auto kind = parse_noise(o.noise);
    auto mode = parse_mode(o.mode);
    auto roots = threshold(gate, kind, mode);
    if (o.format == "json") {
        emit(threshold_to_json(gate, kind, mode, roots), o, out);
        return kExitOk;
    }
    std::string text;
    for (double r : roots) {
        text += format_sig(r) + "\n";
    }
    if (roots.empty()) {
        text = "none\n";
    }
    emit(text, o, out);
    return kExitOk;
}

int cmd_sweep(const Options &o, std::ostream &out) {
    auto gate = parse_gate(o.gate);
    auto kind = parse_noise(o.noise);
    auto rows = sweep(gate, kind, o.grid);
    emit(o.format == "json" ? sweep_to_json(rows) : sweep_to_csv(rows), o, out);
    return kExitOk;
}

int cmd_simulate(const Options &o, std::ostream &out) {
    auto gate = parse_gate(o.gate);
    auto kind = parse_noise(o.noise);
    auto w = build_witness(gate, 0.5);
    ShotPlan plan{o.shots, o.seed};
    auto result = estimate_expectation(w, noisy_gate(gate, {kind, o.q1, o.q2}), plan);
    emit(estimate_to_json(result, plan), o, out);
    return kExitOk;
}

int cmd_selftest(std::ostream &out) {
    auto results = run_selftest();
    bool all = true;
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
        all = all && r.passed;
    }
    out << (all ? "selftest passed\n" : "selftest FAILED\n");
    if (!all) {
        throw InvariantFailure("selftest failed");
    }
    return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Witness-based detection of non-separable random-unitary two-qubit channels", "chanwit"};
    app.require_subcommand(1);
    Options o;

    auto *witness = app.add_subcommand("witness", "Print beta, the Pauli decomposition and a minimal setting cover");
    add_gate(witness, o);
    witness->add_option("--beta", o.beta, "Use this beta instead of optimizing")->check(CLI::Range(0.0, 1.0));
    witness->add_option("--restarts", o.restarts, "Optimizer restarts")->check(CLI::Range(1, 100000));
    witness->add_option("--seed", o.seed, "Optimizer seed");
    witness->add_option("--format", o.format, "Output format")->transform(CLI::IsMember({"text", "json"}));
    add_out(witness, o);

    auto *beta = app.add_subcommand("beta", "Optimize beta over product-unitary Choi states");
    add_gate(beta, o);
    beta->add_option("--restarts", o.restarts, "Optimizer restarts")->check(CLI::Range(1, 100000));
    beta->add_option("--seed", o.seed, "Optimizer seed");
    add_out(beta, o);

    auto *expect = app.add_subcommand("expect", "Witness expectation on a noisy gate, analytic and numeric");
    add_gate(expect, o);
    add_noise(expect, o);
    add_strengths(expect, o);
    expect->add_option("--format", o.format, "Output format")->transform(CLI::IsMember({"text", "json"}));
    add_out(expect, o);

    auto *thresh = app.add_subcommand("threshold", "Noise strengths where detection switches on or off");
    add_gate(thresh, o);
    add_noise(thresh, o);
    thresh->add_option("--mode", o.mode, "Which strengths vary")->required()->transform(CLI::IsMember(kModeChoices));
    thresh->add_option("--format", o.format, "Output format")->transform(CLI::IsMember({"text", "json"}));
    add_out(thresh, o);

    auto *sw = app.add_subcommand("sweep", "Expectation over a (q1, q2) grid");
    add_gate(sw, o);
    add_noise(sw, o);
    sw->add_option("--grid", o.grid, "Points per axis")->check(CLI::Range(2, 10001));
    sw->add_option("--format", o.format, "Output format")->transform(CLI::IsMember({"csv", "json"}));
    add_out(sw, o);

    auto *sim = app.add_subcommand("simulate", "Shot-based estimate of the witness expectation");
    add_gate(sim, o);
    add_noise(sim, o);
    add_strengths(sim, o);
    sim->add_option("--shots", o.shots, "Shots per measurement setting")->check(CLI::Range(1, 1000000000));
    sim->add_option("--seed", o.seed, "Sampling seed");
    sim->add_option("--format", o.format, "Output format")->transform(CLI::IsMember({"json"}));
    add_out(sim, o);

    auto *self = app.add_subcommand("selftest", "Run the invariant checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "chanwit: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (*witness) {
            return cmd_witness(o, out);
        }
        if (*beta) {
            return cmd_beta(o, out);
        }
        if (*expect) {
            return cmd_expect(o, out);
        }
        if (*thresh) {
            return cmd_threshold(o, out);
        }
        if (*sw) {
            return cmd_sweep(o, out);
        }
        if (*sim) {
            return cmd_simulate(o, out);
        }
        if (*self) {
            return cmd_selftest(out);
        }
    } catch (const InvariantFailure &e) {
        err << "chanwit: invariant failure: " << e.what() << "\n";
        return kExitInvariantFailure;
    } catch (const std::invalid_argument &e) {
        err << "chanwit: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        err << "chanwit: internal error: " << e.what() << "\n";
        return kExitInvariantFailure;
    }
    err << "chanwit: no subcommand\n";
    return kExitInvalidInput;
}

}  // namespace chanwit::cli
