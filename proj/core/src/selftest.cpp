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

#include "chanwit/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "chanwit/channels.hpp"
#include "chanwit/choi.hpp"
#include "chanwit/protocol.hpp"
#include "chanwit/robustness.hpp"
#include "chanwit/witness.hpp"

namespace chanwit {

namespace {

constexpr GateName kGates[] = {GateName::CNOT, GateName::CZ};
constexpr NoiseKind kKinds[] = {NoiseKind::Depolarising, NoiseKind::Dephasing, NoiseKind::BitFlip,
                                NoiseKind::AmplitudeDamping};

CheckResult check(std::string name, const std::function<std::pair<bool, std::string>()> &body) {
    try {
        auto [ok, detail] = body();
        return {std::move(name), ok, std::move(detail)};
    } catch (const std::exception &e) {
        return {std::move(name), false, std::string("exception: ") + e.what()};
    }
}

}  // namespace

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out;

    out.push_back(check("constructors are CPT", [] {
        bool ok = true;
        for (double q : {0.0, 0.25, 0.5, 1.0}) {
            for (auto k : kKinds) {
                ok = ok && validate_cpt(single_qubit_noise(k, q));
                for (auto g : kGates) {
                    ok = ok && validate_cpt(noisy_gate(g, {k, q, 1.0 - q}));
                }
            }
        }
        return std::pair{ok, std::string("4 kinds x 4 strengths")};
    }));

    out.push_back(check("pauli decomposition reconstructs witness", [] {
        double worst = 0;
        for (auto g : kGates) {
            auto w = build_witness(g, 0.5);
            worst = std::max(worst, max_abs_diff(pauli_decompose(w).reconstruct(), w.matrix));
        }
        return std::pair{worst < 1e-12, fmt::format("max deviation {:.3e}", worst)};
    }));

    out.push_back(check("minimal settings have size 9", [] {
        bool ok = true;
        for (auto g : kGates) {
            auto d = pauli_decompose(build_witness(g, 0.5));
            ok = ok && minimal_settings(d).size() == 9 && !cover_exists(d, 8);
        }
        return std::pair{ok, std::string("CNOT and CZ")};
    }));

    out.push_back(check("witness non-negative on SRU channels", [] {
        double lowest = 1;
        for (auto g : kGates) {
            auto w = build_witness(g, 0.5);
            for (std::uint64_t seed = 0; seed < 200; ++seed) {
                lowest = std::min(lowest, expectation(w, sample_sru(1 + seed % 6, seed)));
            }
        }
        return std::pair{lowest >= -1e-9, fmt::format("minimum {:.6f} over 400 channels", lowest)};
    }));

    out.push_back(check("three overlap routes agree", [] {
        double worst = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::size_t d = seed % 2 == 0 ? 2 : 4;
            auto m = random_channel(d, 1 + seed % 3, 2 * seed);
            auto l = random_channel(d, 1 + (seed + 1) % 3, 2 * seed + 1);
            double a = overlap_direct(choi_of(m), choi_of(l));
            double b = overlap_kraus(m, l);
            double c = overlap_basis(m, l);
            worst = std::max({worst, std::abs(a - b), std::abs(b - c)});
        }
        return std::pair{worst < 1e-10, fmt::format("max discrepancy {:.3e}", worst)};
    }));

    out.push_back(check("closed forms match Kraus computation", [] {
        double worst = 0;
        for (auto g : kGates) {
            auto w = build_witness(g, 0.5);
            for (auto k : kKinds) {
                for (int i = 0; i <= 10; ++i) {
                    for (int j = 0; j <= 10; ++j) {
                        double q1 = i / 10.0;
                        double q2 = j / 10.0;
                        double numeric = expectation(w, noisy_gate(g, {k, q1, q2}));
                        worst = std::max(worst, std::abs(numeric - closed_form(g, k, q1, q2)));
                    }
                }
            }
        }
        return std::pair{worst < 1e-10, fmt::format("max discrepancy {:.3e} on 8 x 11 x 11 points", worst)};
    }));

    out.push_back(check("dephasing commutes with CZ", [] {
        double worst = 0;
        auto cz = unitary_channel(gate_matrix(GateName::CZ));
        for (double q : {0.1, 0.5, 0.9}) {
            auto noise = tensor(dephasing(q), dephasing(q));
            auto a = choi_of(compose(noise, cz));
            auto b = choi_of(compose(cz, noise));
            worst = std::max(worst, max_abs_diff(a.matrix(), b.matrix()));
        }
        return std::pair{worst < 1e-12, fmt::format("max deviation {:.3e}", worst)};
    }));

    out.push_back(check("exact-distribution estimator equals expectation", [] {
        double worst = 0;
        for (auto g : kGates) {
            auto w = build_witness(g, 0.5);
            auto plan = MeasurementPlan::from(w);
            for (auto k : kKinds) {
                auto ch = noisy_gate(g, {k, 0.2, 0.3});
                worst = std::max(worst, std::abs(exact_estimate(plan, ch).estimate - expectation(w, ch)));
            }
        }
        return std::pair{worst < 1e-10, fmt::format("max discrepancy {:.3e}", worst)};
    }));

    out.push_back(check("beta of CNOT is 1/2", [] {
        double b = beta_sru(gate_matrix(GateName::CNOT), {.restarts = 20, .seed = 1, .tol = 1e-8});
        return std::pair{std::abs(b - 0.5) < 1e-6, fmt::format("beta {:.12f}", b)};
    }));

    return out;
}

}  // namespace chanwit
