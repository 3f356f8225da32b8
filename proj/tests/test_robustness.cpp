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

#include "chanwit/choi.hpp"
#include "chanwit/witness.hpp"
#include "gtest/gtest.h"
#include "json.hpp"

using namespace chanwit;

namespace {

constexpr GateName kGates[] = {GateName::CNOT, GateName::CZ};
constexpr NoiseKind kKinds[] = {NoiseKind::Depolarising, NoiseKind::Dephasing, NoiseKind::BitFlip,
                                NoiseKind::AmplitudeDamping};

double numeric(GateName gate, NoiseKind kind, double q1, double q2) {
    return expectation(build_witness(gate, 0.5), noisy_gate(gate, {kind, q1, q2}));
}

// Checks that the Kraus-route expectation changes sign across `root`.
void expect_numeric_sign_change(GateName gate, NoiseKind kind, ThresholdMode mode, double root) {
    auto at = [&](double q) {
        switch (mode) {
            case ThresholdMode::BeforeOnly:
                return numeric(gate, kind, q, 0);
            case ThresholdMode::AfterOnly:
                return numeric(gate, kind, 0, q);
            case ThresholdMode::Equal:
                return numeric(gate, kind, q, q);
        }
        return 0.0;
    };
    EXPECT_LT(at(root - 1e-7) * at(root + 1e-7), 0) << root;
}

}  // namespace

TEST(robustness, noisy_gate_without_noise_is_the_gate) {
    for (auto gate : kGates) {
        for (auto kind : kKinds) {
            auto ch = noisy_gate(gate, {kind, 0, 0});
            auto ideal = unitary_channel(gate_matrix(gate));
            EXPECT_LT(max_abs_diff(choi_of(ch).matrix(), choi_of(ideal).matrix()), 1e-15);
        }
    }
}

TEST(robustness, noisy_gate_kraus_counts) {
    EXPECT_EQ(noisy_gate(GateName::CNOT, {NoiseKind::Depolarising, 0.3, 0.3}).size(), 256u);
    EXPECT_EQ(noisy_gate(GateName::CZ, {NoiseKind::AmplitudeDamping, 0.3, 0}).size(), 4u);
    EXPECT_TRUE(validate_cpt(noisy_gate(GateName::CZ, {NoiseKind::AmplitudeDamping, 0.3, 0.8})));
}

TEST(robustness, noisy_gate_errors) {
    ASSERT_THROW(noisy_gate(GateName::H, {}), std::invalid_argument);
    ASSERT_THROW(noisy_gate(GateName::CNOT, {NoiseKind::Dephasing, 1.2, 0}), std::invalid_argument);
    ASSERT_THROW(noisy_gate(GateName::CNOT, {NoiseKind::Dephasing, 0, -0.2}), std::invalid_argument);
    ASSERT_THROW(closed_form(GateName::CNOT, NoiseKind::BitFlip, 0, 1.5), std::invalid_argument);
    ASSERT_THROW(closed_form(GateName::I, NoiseKind::BitFlip, 0, 0), std::invalid_argument);
}

TEST(robustness, closed_form_matches_kraus_on_grid) {
    for (auto gate : kGates) {
        auto w = build_witness(gate, 0.5);
        for (auto kind : kKinds) {
            double worst = 0;
            for (int i = 0; i <= 20; ++i) {
                for (int j = 0; j <= 20; ++j) {
                    double q1 = i / 20.0;
                    double q2 = j / 20.0;
                    double diff = closed_form(gate, kind, q1, q2) - expectation(w, noisy_gate(gate, {kind, q1, q2}));
                    worst = std::max(worst, std::abs(diff));
                }
            }
            EXPECT_LT(worst, 1e-10) << gate_label(gate) << " " << noise_label(kind);
        }
    }
}

TEST(robustness, closed_form_examples) {
    for (double q : {0.0, 0.2, 0.5, 0.9, 1.0}) {
        double qbar = 1 - 3 * q / 4;
        EXPECT_NEAR(closed_form(GateName::CNOT, NoiseKind::Depolarising, q, 0), 0.5 - qbar * qbar, 1e-15);
        EXPECT_NEAR(closed_form(GateName::CNOT, NoiseKind::Depolarising, q, q),
                    0.5 - (q - 2) * (q - 2) * (5 * q * q - 8 * q + 4) / 16, 1e-14);
        double gbar = 1 - q;
        EXPECT_NEAR(closed_form(GateName::CZ, NoiseKind::AmplitudeDamping, q, q), 0.5 - std::pow(1 + gbar, 4) / 16,
                    1e-14);
    }
    for (double q1 : {0.1, 0.4, 0.7}) {
        for (double q2 : {0.0, 0.3, 0.95}) {
            double a = 1 - q1 - q2 + 2 * q1 * q2;
            EXPECT_NEAR(closed_form(GateName::CZ, NoiseKind::Dephasing, q1, q2), 0.5 - a * a, 1e-14);
            EXPECT_NEAR(closed_form(GateName::CZ, NoiseKind::BitFlip, q1, q2),
                        0.5 - std::pow(1 - q1, 2) * std::pow(1 - q2, 2), 1e-14);
        }
    }
}

TEST(robustness, depolarising_form_is_gate_independent) {
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            double q1 = i / 20.0;
            double q2 = j / 20.0;
            EXPECT_EQ(closed_form(GateName::CNOT, NoiseKind::Depolarising, q1, q2),
                      closed_form(GateName::CZ, NoiseKind::Depolarising, q1, q2));
        }
    }
}

TEST(robustness, cnot_bitflip_equals_cnot_dephasing) {
    auto w = build_witness(GateName::CNOT, 0.5);
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            double q1 = i / 20.0;
            double q2 = j / 20.0;
            EXPECT_EQ(closed_form(GateName::CNOT, NoiseKind::BitFlip, q1, q2),
                      closed_form(GateName::CNOT, NoiseKind::Dephasing, q1, q2));
            EXPECT_NEAR(expectation(w, noisy_gate(GateName::CNOT, {NoiseKind::BitFlip, q1, q2})),
                        expectation(w, noisy_gate(GateName::CNOT, {NoiseKind::Dephasing, q1, q2})), 1e-12);
        }
    }
}

TEST(robustness, closed_forms_are_exchange_symmetric) {
    for (auto gate : kGates) {
        for (auto kind : kKinds) {
            for (int i = 0; i <= 20; ++i) {
                for (int j = 0; j < i; ++j) {
                    EXPECT_NEAR(closed_form(gate, kind, i / 20.0, j / 20.0), closed_form(gate, kind, j / 20.0, i / 20.0),
                                1e-15);
                }
            }
        }
    }
}

TEST(robustness, analytic_thresholds) {
    struct Case {
        GateName gate;
        NoiseKind kind;
        ThresholdMode mode;
        std::vector<double> roots;
    };
    double s2 = std::sqrt(2.0);
    std::vector<Case> cases{
        {GateName::CNOT, NoiseKind::Depolarising, ThresholdMode::BeforeOnly, {(4 - 2 * s2) / 3}},
        {GateName::CZ, NoiseKind::Depolarising, ThresholdMode::BeforeOnly, {(4 - 2 * s2) / 3}},
        {GateName::CNOT, NoiseKind::Dephasing, ThresholdMode::BeforeOnly, {1 - 1 / s2}},
        {GateName::CNOT, NoiseKind::BitFlip, ThresholdMode::BeforeOnly, {1 - 1 / s2}},
        {GateName::CZ, NoiseKind::Dephasing, ThresholdMode::BeforeOnly, {1 - 1 / s2}},
        {GateName::CZ, NoiseKind::BitFlip, ThresholdMode::BeforeOnly, {1 - 1 / s2}},
        {GateName::CZ,
         NoiseKind::Dephasing,
         ThresholdMode::Equal,
         {(1 - std::sqrt(s2 - 1)) / 2, (1 + std::sqrt(s2 - 1)) / 2}},
        {GateName::CZ, NoiseKind::BitFlip, ThresholdMode::Equal, {1 - std::pow(2.0, -0.25)}},
        {GateName::CZ, NoiseKind::AmplitudeDamping, ThresholdMode::Equal, {2 - std::pow(8.0, 0.25)}},
    };
    for (const auto &c : cases) {
        auto roots = threshold(c.gate, c.kind, c.mode);
        ASSERT_EQ(roots.size(), c.roots.size()) << gate_label(c.gate) << " " << noise_label(c.kind);
        for (std::size_t k = 0; k < roots.size(); ++k) {
            EXPECT_NEAR(roots[k], c.roots[k], 1e-9);
            expect_numeric_sign_change(c.gate, c.kind, c.mode, roots[k]);
        }
    }
}

TEST(robustness, bisection_only_thresholds) {
    struct Case {
        GateName gate;
        NoiseKind kind;
        ThresholdMode mode;
        double root;
    };
    std::vector<Case> cases{
        {GateName::CNOT, NoiseKind::Depolarising, ThresholdMode::Equal, 0.2150365636},
        {GateName::CNOT, NoiseKind::Dephasing, ThresholdMode::Equal, 0.1713509469},
        {GateName::CNOT, NoiseKind::AmplitudeDamping, ThresholdMode::BeforeOnly, 0.5351585363},
        {GateName::CZ, NoiseKind::AmplitudeDamping, ThresholdMode::BeforeOnly, 0.5351585363},
        {GateName::CNOT, NoiseKind::AmplitudeDamping, ThresholdMode::Equal, 0.3146214603},
    };
    for (const auto &c : cases) {
        auto roots = threshold(c.gate, c.kind, c.mode);
        ASSERT_EQ(roots.size(), 1u);
        EXPECT_NEAR(roots[0], c.root, 1e-9);
        expect_numeric_sign_change(c.gate, c.kind, c.mode, roots[0]);
    }
}

TEST(robustness, after_only_mirrors_before_only) {
    for (auto gate : kGates) {
        for (auto kind : kKinds) {
            auto before = threshold(gate, kind, ThresholdMode::BeforeOnly);
            auto after = threshold(gate, kind, ThresholdMode::AfterOnly);
            ASSERT_EQ(before.size(), after.size());
            for (std::size_t k = 0; k < before.size(); ++k) {
                EXPECT_NEAR(before[k], after[k], 1e-12);
            }
        }
    }
}

TEST(robustness, threshold_without_sign_change_is_empty) {
    // A single scan interval sees detection at both ends and misses both roots.
    ThresholdOptions coarse{.scan_intervals = 1};
    EXPECT_TRUE(threshold(GateName::CZ, NoiseKind::Dephasing, ThresholdMode::Equal, coarse).empty());
    ASSERT_THROW(threshold(GateName::CZ, NoiseKind::Dephasing, ThresholdMode::Equal, {.scan_intervals = 0}),
                 std::invalid_argument);
}

TEST(robustness, threshold_json) {
    auto roots = threshold(GateName::CZ, NoiseKind::Dephasing, ThresholdMode::Equal);
    auto doc = nlohmann::json::parse(threshold_to_json(GateName::CZ, NoiseKind::Dephasing, ThresholdMode::Equal, roots));
    EXPECT_EQ(doc["gate"], "CZ");
    EXPECT_EQ(doc["noise"], "dephasing");
    EXPECT_EQ(doc["mode"], "equal");
    ASSERT_EQ(doc["roots"].size(), 2u);
    EXPECT_NEAR(doc["roots"][0].get<double>(), 0.178202873, 1e-9);
}

TEST(robustness, sweep_grid) {
    auto rows = sweep(GateName::CNOT, NoiseKind::Depolarising, 5);
    ASSERT_EQ(rows.size(), 25u);
    EXPECT_EQ(rows[0].q1, 0);
    EXPECT_EQ(rows[0].q2, 0);
    EXPECT_NEAR(rows[0].value, -0.5, 1e-15);
    EXPECT_TRUE(rows[0].detected);
    EXPECT_EQ(rows[1].q1, 0);
    EXPECT_EQ(rows[1].q2, 0.25);
    // q-bar = 1/4 at the far corner.
    EXPECT_NEAR(rows.back().value, 0.5 - 1.0 / 16, 1e-15);
    EXPECT_FALSE(rows.back().detected);
    for (const auto &r : rows) {
        EXPECT_EQ(r.detected, r.value < 0);
    }
    for (auto kind : kKinds) {
        EXPECT_NEAR(sweep(GateName::CNOT, kind, 2)[0].value, -0.5, 1e-15);
    }
    ASSERT_THROW(sweep(GateName::CNOT, NoiseKind::Depolarising, 1), std::invalid_argument);
}

TEST(robustness, sweep_csv) {
    auto rows = sweep(GateName::CZ, NoiseKind::BitFlip, 3);
    auto csv = sweep_to_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "q1,q2,value,detected");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10);
    EXPECT_NE(csv.find("\n0,0,-0.500000000000,true\n"), std::string::npos) << csv;
    EXPECT_NE(csv.find("\n1.00000000000,1.00000000000,0.500000000000,false\n"), std::string::npos) << csv;
    EXPECT_EQ(csv, sweep_to_csv(sweep(GateName::CZ, NoiseKind::BitFlip, 3)));
}

TEST(robustness, sweep_json) {
    auto doc = nlohmann::json::parse(sweep_to_json(sweep(GateName::CZ, NoiseKind::Dephasing, 4)));
    ASSERT_EQ(doc.size(), 16u);
    EXPECT_EQ(doc[0]["detected"], true);
    EXPECT_NEAR(doc[15]["value"].get<double>(), -0.5, 1e-12);
}

TEST(robustness, labels_round_trip) {
    for (auto kind : kKinds) {
        EXPECT_EQ(parse_noise(noise_label(kind)), kind);
    }
    EXPECT_EQ(parse_noise("amplitude-damping"), NoiseKind::AmplitudeDamping);
    ASSERT_THROW(parse_noise("erasure"), std::invalid_argument);
    for (auto mode : {ThresholdMode::BeforeOnly, ThresholdMode::AfterOnly, ThresholdMode::Equal}) {
        EXPECT_EQ(parse_mode(mode_label(mode)), mode);
    }
    ASSERT_THROW(parse_mode("both"), std::invalid_argument);
}
