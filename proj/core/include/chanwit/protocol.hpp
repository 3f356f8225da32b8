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

#ifndef CHANWIT_PROTOCOL_HPP
#define CHANWIT_PROTOCOL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chanwit/channels.hpp"
#include "chanwit/witness.hpp"

namespace chanwit {

/// Born probabilities of the 16 joint outcomes when each qubit of the
/// channel's Choi state is measured along its assigned axis. Outcome index
/// bits are ordered A, B, C, D (A most significant); bit 0 means eigenvalue
/// +1, bit 1 means -1.
using OutcomeDistribution = std::array<double, 16>;

OutcomeDistribution setting_distribution(const KrausChannel &ch, const MeasurementSetting &s);

/// Eigenvalue product of the non-identity factors of `p` for an outcome.
int outcome_parity(const PauliString &p, std::size_t outcome);

struct ShotPlan {
    std::size_t shots_per_setting = 100000;
    std::uint64_t seed = 0;
};

struct TermEstimate {
    PauliString string;
    double coeff = 0;
    double mean = 0;
};

struct SettingEstimate {
    MeasurementSetting setting;
    std::vector<TermEstimate> terms;
};

struct EstimateResult {
    double estimate = 0;
    double std_error = 0;
    std::vector<SettingEstimate> per_setting;
};

/// Estimator layout: the identity term is added exactly, every other term
/// is read from the first setting of `settings` that covers it.
struct MeasurementPlan {
    double identity_coeff = 0;
    std::vector<MeasurementSetting> settings;
    /// terms[s] are the terms assigned to settings[s].
    std::vector<std::vector<PauliTerm>> terms;

    static MeasurementPlan from(const PauliDecomposition &d, std::span<const MeasurementSetting> settings);
    /// Decomposes `w` and uses its minimal setting cover.
    static MeasurementPlan from(const Witness &w);
};

/// Simulated experiment: per setting, multinomial sampling of the exact
/// outcome distribution with an RNG stream keyed by (seed, setting index).
/// The standard error propagates each setting's sample variance of its
/// combined term estimator (covariances within a setting included).
/// Throws std::invalid_argument for zero shots.
EstimateResult estimate_expectation(const MeasurementPlan &plan, const KrausChannel &ch, const ShotPlan &shots);
EstimateResult estimate_expectation(const Witness &w, const KrausChannel &ch, const ShotPlan &shots);

/// The estimator evaluated on exact probabilities instead of samples; equals
/// the exact witness expectation. std_error is zero.
EstimateResult exact_estimate(const MeasurementPlan &plan, const KrausChannel &ch);

/// Multinomial draw of `n` trials via sequential conditional binomials.
std::array<std::uint64_t, 16> sample_multinomial(std::uint64_t n, const OutcomeDistribution &p, std::mt19937_64 &rng);

/// {"estimate", "std_error", "detected", "shots_per_setting", "seed",
///  "settings": [...], "terms": [...]}; numbers at 12 significant digits.
std::string estimate_to_json(const EstimateResult &r, const ShotPlan &shots);

}  // namespace chanwit

#endif
