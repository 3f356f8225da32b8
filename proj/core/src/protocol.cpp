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

#include "chanwit/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chanwit/choi.hpp"
#include "chanwit/numfmt.hpp"
#include "chanwit/rng.hpp"
#include "json.hpp"

namespace chanwit {

namespace {

// Rows are the conjugated eigenvectors (+1 first) of the measured axis, so
// that R rho R^dagger carries outcome probabilities on its diagonal.
const ComplexMatrix &basis_rotation(Pauli axis) {
    static const double s = 1.0 / std::sqrt(2.0);
    static const ComplexMatrix kX{{s, s}, {s, -s}};
    static const ComplexMatrix kY{{s, Complex(0, -s)}, {s, Complex(0, s)}};
    static const ComplexMatrix kZ{{1, 0}, {0, 1}};
    switch (axis) {
        case Pauli::X:
            return kX;
        case Pauli::Y:
            return kY;
        case Pauli::Z:
            return kZ;
        case Pauli::I:
            break;
    }
    throw std::invalid_argument("basis_rotation: identity is not a measurement axis");
}

struct SettingTally {
    std::vector<TermEstimate> terms;
    double mean = 0;
    double variance_of_mean = 0;
};

// Evaluates the setting's combined estimator on outcome weights that sum to
// `total` (shot counts or exact probabilities with total = 1).
SettingTally tally(const std::vector<PauliTerm> &terms, const std::array<double, 16> &weights, double total,
                   bool sampled) {
    SettingTally t;
    std::array<double, 16> y{};
    for (const auto &term : terms) {
        TermEstimate est{term.string, term.coeff, 0.0};
        for (std::size_t o = 0; o < 16; ++o) {
            double parity = outcome_parity(term.string, o);
            est.mean += weights[o] * parity;
            y[o] += term.coeff * parity;
        }
        est.mean /= total;
        t.terms.push_back(est);
    }
    for (std::size_t o = 0; o < 16; ++o) {
        t.mean += weights[o] * y[o];
    }
    t.mean /= total;
    if (sampled && total > 1.0) {
        double ss = 0;
        for (std::size_t o = 0; o < 16; ++o) {
            double dev = y[o] - t.mean;
            ss += weights[o] * dev * dev;
        }
        t.variance_of_mean = ss / (total - 1.0) / total;
    }
    return t;
}

}  // namespace

OutcomeDistribution setting_distribution(const KrausChannel &ch, const MeasurementSetting &s) {
    if (ch.dim() != 4) {
        throw std::invalid_argument("setting_distribution: channel must act on two qubits");
    }
    auto choi = choi_of(ch);
    ComplexMatrix r = basis_rotation(s.axes[0]);
    for (std::size_t k = 1; k < 4; ++k) {
        r = kron(r, basis_rotation(s.axes[k]));
    }
    ComplexMatrix rotated = r * choi.matrix() * r.adjoint();
    OutcomeDistribution p{};
    for (std::size_t o = 0; o < 16; ++o) {
        p[o] = rotated(o, o).real();
    }
    return p;
}

int outcome_parity(const PauliString &p, std::size_t outcome) {
    int parity = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        if (p.labels[k] != Pauli::I && ((outcome >> (3 - k)) & 1)) {
            parity = -parity;
        }
    }
    return parity;
}

MeasurementPlan MeasurementPlan::from(const PauliDecomposition &d, std::span<const MeasurementSetting> settings) {
    MeasurementPlan plan;
    plan.settings.assign(settings.begin(), settings.end());
    plan.terms.resize(settings.size());
    for (const auto &term : d.terms) {
        if (term.string.is_identity()) {
            plan.identity_coeff = term.coeff;
            continue;
        }
        auto it = std::find_if(settings.begin(), settings.end(),
                               [&](const MeasurementSetting &s) { return s.covers(term.string); });
        if (it == settings.end()) {
            throw std::invalid_argument("MeasurementPlan: no setting covers " + term.string.str());
        }
        plan.terms[static_cast<std::size_t>(it - settings.begin())].push_back(term);
    }
    return plan;
}

MeasurementPlan MeasurementPlan::from(const Witness &w) {
    auto d = pauli_decompose(w);
    auto settings = minimal_settings(d);
    return from(d, settings);
}

std::array<std::uint64_t, 16> sample_multinomial(std::uint64_t n, const OutcomeDistribution &p, std::mt19937_64 &rng) {
    std::array<std::uint64_t, 16> counts{};
    double remaining_mass = 0;
    for (double x : p) {
        remaining_mass += std::max(x, 0.0);
    }
    std::uint64_t remaining = n;
    for (std::size_t i = 0; i + 1 < p.size() && remaining > 0; ++i) {
        double pi = std::max(p[i], 0.0);
        double ratio = remaining_mass > 0 ? std::clamp(pi / remaining_mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<std::uint64_t> binom(remaining, ratio);
        counts[i] = binom(rng);
        remaining -= counts[i];
        remaining_mass -= pi;
    }
    counts.back() += remaining;
    return counts;
}

EstimateResult estimate_expectation(const MeasurementPlan &plan, const KrausChannel &ch, const ShotPlan &shots) {
    if (shots.shots_per_setting == 0) {
        throw std::invalid_argument("estimate_expectation: shots_per_setting must be positive");
    }
    EstimateResult result;
    result.estimate = plan.identity_coeff;
    double variance = 0;
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
        auto dist = setting_distribution(ch, plan.settings[s]);
        auto rng = make_stream(shots.seed, s);
        auto counts = sample_multinomial(shots.shots_per_setting, dist, rng);
        std::array<double, 16> weights{};
        for (std::size_t o = 0; o < 16; ++o) {
            weights[o] = static_cast<double>(counts[o]);
        }
        auto t = tally(plan.terms[s], weights, static_cast<double>(shots.shots_per_setting), true);
        result.estimate += t.mean;
        variance += t.variance_of_mean;
        result.per_setting.push_back({plan.settings[s], std::move(t.terms)});
    }
    result.std_error = std::sqrt(variance);
    return result;
}

EstimateResult estimate_expectation(const Witness &w, const KrausChannel &ch, const ShotPlan &shots) {
    return estimate_expectation(MeasurementPlan::from(w), ch, shots);
}

EstimateResult exact_estimate(const MeasurementPlan &plan, const KrausChannel &ch) {
    EstimateResult result;
    result.estimate = plan.identity_coeff;
    for (std::size_t s = 0; s < plan.settings.size(); ++s) {
        auto dist = setting_distribution(ch, plan.settings[s]);
        auto t = tally(plan.terms[s], dist, 1.0, false);
        result.estimate += t.mean;
        result.per_setting.push_back({plan.settings[s], std::move(t.terms)});
    }
    return result;
}

std::string estimate_to_json(const EstimateResult &r, const ShotPlan &shots) {
    nlohmann::json settings = nlohmann::json::array();
    nlohmann::json terms = nlohmann::json::array();
    for (const auto &s : r.per_setting) {
        settings.push_back(s.setting.str());
        for (const auto &t : s.terms) {
            terms.push_back({{"setting", s.setting.str()},
                             {"string", t.string.str()},
                             {"coeff", round_sig(t.coeff)},
                             {"mean", round_sig(t.mean)}});
        }
    }
    nlohmann::json doc{
        {"estimate", round_sig(r.estimate)},
        {"std_error", round_sig(r.std_error)},
        {"detected", r.estimate < 0.0},
        {"shots_per_setting", shots.shots_per_setting},
        {"seed", shots.seed},
        {"settings", std::move(settings)},
        {"terms", std::move(terms)},
    };
    return doc.dump(2) + "\n";
}

}  // namespace chanwit
