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

#include "chanwit/robustness.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "chanwit/numfmt.hpp"
#include "json.hpp"

namespace chanwit {

namespace {

void require_controlled_gate(GateName gate, const char *what) {
    if (gate != GateName::CNOT && gate != GateName::CZ) {
        throw std::invalid_argument(std::string(what) + ": gate must be CNOT or CZ");
    }
}

void require_unit_interval(double q, const char *name) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

double depolarising_form(double q1, double q2) {
    double b1 = 1.0 - 0.75 * q1;
    double b2 = 1.0 - 0.75 * q2;
    double s = 16.0 * b1 * b1 * b2 * b2 + 2.0 * q1 * b1 * q2 * b2 + q1 * q1 * q2 * b2 + q1 * b1 * q2 * q2 +
               (5.0 / 16.0) * q1 * q1 * q2 * q2;
    return 0.5 - s / 16.0;
}

// Shared by dephasing and bit flip on CNOT.
double cnot_pauli_axis_form(double q1, double q2) {
    double a = (1.0 - q1) * (1.0 - q2);
    return 0.5 - (a * a + q1 * q2 * (1.0 - q1 * q2));
}

double cz_dephasing_form(double q1, double q2) {
    double a = 1.0 - q1 - q2 + 2.0 * q1 * q2;
    return 0.5 - a * a;
}

double cz_bitflip_form(double q1, double q2) {
    double a = (1.0 - q1) * (1.0 - q2);
    return 0.5 - a * a;
}

double cnot_damping_form(double g1, double g2) {
    double b1 = 1.0 - g1;
    double b2 = 1.0 - g2;
    double inner = 1.0 + std::sqrt(b1 * b2) * (1.0 + std::sqrt(b1) + std::sqrt(b2));
    return 0.5 - (inner * inner + g1 * b1 * g2 * b2) / 16.0;
}

double cz_damping_form(double g1, double g2) {
    double inner = 1.0 + std::sqrt((1.0 - g1) * (1.0 - g2));
    return 0.5 - std::pow(inner, 4) / 16.0;
}

double bisect_boundary(const std::function<double(double)> &f, double lo, double hi, double xtol) {
    bool lo_detected = f(lo) < 0.0;
    while (hi - lo > xtol) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if ((f(mid) < 0.0) == lo_detected) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::string_view noise_label(NoiseKind k) {
    switch (k) {
        case NoiseKind::Depolarising:
            return "depolarising";
        case NoiseKind::Dephasing:
            return "dephasing";
        case NoiseKind::BitFlip:
            return "bitflip";
        case NoiseKind::AmplitudeDamping:
            return "amplitude_damping";
    }
    return "?";
}

NoiseKind parse_noise(std::string_view text) {
    if (text == "depolarising" || text == "depolarizing") {
        return NoiseKind::Depolarising;
    }
    if (text == "dephasing") {
        return NoiseKind::Dephasing;
    }
    if (text == "bitflip" || text == "bit_flip" || text == "bit-flip") {
        return NoiseKind::BitFlip;
    }
    if (text == "amplitude_damping" || text == "amplitude-damping") {
        return NoiseKind::AmplitudeDamping;
    }
    throw std::invalid_argument("unknown noise kind '" + std::string(text) + "'");
}

KrausChannel single_qubit_noise(NoiseKind kind, double strength) {
    switch (kind) {
        case NoiseKind::Depolarising:
            return depolarising(strength);
        case NoiseKind::Dephasing:
            return dephasing(strength);
        case NoiseKind::BitFlip:
            return bit_flip(strength);
        case NoiseKind::AmplitudeDamping:
            return amplitude_damping(strength);
    }
    throw std::invalid_argument("single_qubit_noise: unknown kind");
}

void NoiseSpec::validate() const {
    require_unit_interval(q1, "q1");
    require_unit_interval(q2, "q2");
}

KrausChannel noisy_gate(GateName gate, const NoiseSpec &noise) {
    require_controlled_gate(gate, "noisy_gate");
    noise.validate();
    auto n1 = single_qubit_noise(noise.kind, noise.q1);
    auto n2 = single_qubit_noise(noise.kind, noise.q2);
    auto before = tensor(n1, n1);
    auto after = tensor(n2, n2);
    return compose(after, compose(unitary_channel(gate_matrix(gate)), before));
}

double closed_form(GateName gate, NoiseKind kind, double q1, double q2) {
    require_controlled_gate(gate, "closed_form");
    require_unit_interval(q1, "q1");
    require_unit_interval(q2, "q2");
    bool cnot = gate == GateName::CNOT;
    switch (kind) {
        case NoiseKind::Depolarising:
            return depolarising_form(q1, q2);
        case NoiseKind::Dephasing:
            return cnot ? cnot_pauli_axis_form(q1, q2) : cz_dephasing_form(q1, q2);
        case NoiseKind::BitFlip:
            return cnot ? cnot_pauli_axis_form(q1, q2) : cz_bitflip_form(q1, q2);
        case NoiseKind::AmplitudeDamping:
            return cnot ? cnot_damping_form(q1, q2) : cz_damping_form(q1, q2);
    }
    throw std::invalid_argument("closed_form: unknown noise kind");
}

std::string_view mode_label(ThresholdMode m) {
    switch (m) {
        case ThresholdMode::BeforeOnly:
            return "before";
        case ThresholdMode::AfterOnly:
            return "after";
        case ThresholdMode::Equal:
            return "equal";
    }
    return "?";
}

ThresholdMode parse_mode(std::string_view text) {
    if (text == "before" || text == "before_only") {
        return ThresholdMode::BeforeOnly;
    }
    if (text == "after" || text == "after_only") {
        return ThresholdMode::AfterOnly;
    }
    if (text == "equal") {
        return ThresholdMode::Equal;
    }
    throw std::invalid_argument("unknown threshold mode '" + std::string(text) + "'");
}

double slice_value(GateName gate, NoiseKind kind, ThresholdMode mode, double q) {
    switch (mode) {
        case ThresholdMode::BeforeOnly:
            return closed_form(gate, kind, q, 0.0);
        case ThresholdMode::AfterOnly:
            return closed_form(gate, kind, 0.0, q);
        case ThresholdMode::Equal:
            return closed_form(gate, kind, q, q);
    }
    throw std::invalid_argument("slice_value: unknown mode");
}

std::vector<double> threshold(GateName gate, NoiseKind kind, ThresholdMode mode, const ThresholdOptions &options) {
    require_controlled_gate(gate, "threshold");
    if (options.scan_intervals == 0) {
        throw std::invalid_argument("threshold: scan_intervals must be positive");
    }
    auto f = [&](double q) { return slice_value(gate, kind, mode, q); };
    std::vector<double> roots;
    auto n = static_cast<double>(options.scan_intervals);
    double prev_q = 0.0;
    bool prev_detected = f(prev_q) < 0.0;
    for (std::size_t i = 1; i <= options.scan_intervals; ++i) {
        double q = static_cast<double>(i) / n;
        bool detected = f(q) < 0.0;
        if (detected != prev_detected) {
            roots.push_back(bisect_boundary(f, prev_q, q, options.xtol));
        }
        prev_q = q;
        prev_detected = detected;
    }
    return roots;
}

std::vector<SweepRow> sweep(GateName gate, NoiseKind kind, std::size_t grid_points) {
    require_controlled_gate(gate, "sweep");
    if (grid_points < 2) {
        throw std::invalid_argument("sweep: grid_points must be at least 2");
    }
    auto denom = static_cast<double>(grid_points - 1);
    std::vector<SweepRow> rows;
    rows.reserve(grid_points * grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) {
        for (std::size_t j = 0; j < grid_points; ++j) {
            SweepRow r;
            r.q1 = static_cast<double>(i) / denom;
            r.q2 = static_cast<double>(j) / denom;
            r.value = closed_form(gate, kind, r.q1, r.q2);
            r.detected = r.value < 0.0;
            rows.push_back(r);
        }
    }
    return rows;
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
    std::string out = "q1,q2,value,detected\n";
    for (const auto &r : rows) {
        out += format_sig(r.q1);
        out += ',';
        out += format_sig(r.q2);
        out += ',';
        out += format_sig(r.value);
        out += ',';
        out += r.detected ? "true" : "false";
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(std::span<const SweepRow> rows) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &r : rows) {
        doc.push_back({{"q1", round_sig(r.q1)},
                       {"q2", round_sig(r.q2)},
                       {"value", round_sig(r.value)},
                       {"detected", r.detected}});
    }
    return doc.dump(2) + "\n";
}

std::string threshold_to_json(GateName gate, NoiseKind kind, ThresholdMode mode, std::span<const double> roots) {
    nlohmann::json r = nlohmann::json::array();
    for (double x : roots) {
        r.push_back(round_sig(x));
    }
    nlohmann::json doc{{"gate", gate_label(gate)}, {"noise", noise_label(kind)}, {"mode", mode_label(mode)}, {"roots", r}};
    return doc.dump(2) + "\n";
}

}  // namespace chanwit
