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

#ifndef CHANWIT_ROBUSTNESS_HPP
#define CHANWIT_ROBUSTNESS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chanwit/channels.hpp"

namespace chanwit {

enum class NoiseKind { Depolarising, Dephasing, BitFlip, AmplitudeDamping };

std::string_view noise_label(NoiseKind k);
/// "depolarising", "dephasing", "bitflip", "amplitude_damping" (also
/// "amplitude-damping").
NoiseKind parse_noise(std::string_view text);

/// Single-qubit noise of the given kind and strength (q, or gamma for
/// amplitude damping).
KrausChannel single_qubit_noise(NoiseKind kind, double strength);

/// Identical single-qubit noise on both lines before (q1) and after (q2) a
/// controlled gate.
struct NoiseSpec {
    NoiseKind kind = NoiseKind::Depolarising;
    double q1 = 0;
    double q2 = 0;

    /// Throws std::invalid_argument unless both strengths lie in [0, 1].
    void validate() const;
};

/// (N2 (x) N2) o gate o (N1 (x) N1). `gate` must be CNOT or CZ.
KrausChannel noisy_gate(GateName gate, const NoiseSpec &noise);

/// Analytic witness expectation Tr[W_gate C_M] for the noisy gate, with
/// beta = 1/2.
double closed_form(GateName gate, NoiseKind kind, double q1, double q2);

enum class ThresholdMode { BeforeOnly, AfterOnly, Equal };

std::string_view mode_label(ThresholdMode m);
/// "before", "after", "equal" (also "before_only", "after_only").
ThresholdMode parse_mode(std::string_view text);

/// The closed form restricted to one parameter: (q, 0), (0, q) or (q, q).
double slice_value(GateName gate, NoiseKind kind, ThresholdMode mode, double q);

struct ThresholdOptions {
    std::size_t scan_intervals = 1000;
    double xtol = 1e-12;
};

/// Every point in [0, 1] where the slice changes between detected
/// (value < 0) and not detected, ascending. Dense scan followed by
/// bisection of each bracketing interval. Empty if the sign never changes.
std::vector<double> threshold(GateName gate, NoiseKind kind, ThresholdMode mode, const ThresholdOptions &options = {});

struct SweepRow {
    double q1 = 0;
    double q2 = 0;
    double value = 0;
    bool detected = false;
};

/// Uniform grid_points x grid_points grid over [0, 1]^2 in row-major order
/// (q1 outer). Throws std::invalid_argument if grid_points < 2.
std::vector<SweepRow> sweep(GateName gate, NoiseKind kind, std::size_t grid_points);

/// Header `q1,q2,value,detected`, 12 significant digits, '\n' line endings.
std::string sweep_to_csv(std::span<const SweepRow> rows);
std::string sweep_to_json(std::span<const SweepRow> rows);

/// {"gate": ..., "noise": ..., "mode": ..., "roots": [...]}
std::string threshold_to_json(GateName gate, NoiseKind kind, ThresholdMode mode, std::span<const double> roots);

}  // namespace chanwit

#endif
