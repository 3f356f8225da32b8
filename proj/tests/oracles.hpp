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

#ifndef CHANWIT_TESTS_ORACLES_HPP
#define CHANWIT_TESTS_ORACLES_HPP

// Reference computations that deliberately avoid the library's own code
// paths; they only use ComplexMatrix arithmetic and kron.

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "chanwit/channels.hpp"
#include "chanwit/tensor.hpp"
#include "chanwit/witness.hpp"

namespace chanwit::oracle {

/// Choi matrix as sum_k |psi_k><psi_k| with psi_k = (K (x) I)|alpha>.
inline ComplexMatrix choi_by_state_vectors(const KrausChannel &ch) {
    std::size_t d = ch.dim();
    std::vector<Complex> alpha(d * d);
    for (std::size_t k = 0; k < d; ++k) {
        alpha[k * d + k] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    ComplexMatrix c(d * d);
    for (const auto &k : ch.kraus()) {
        auto psi = kron(k, ComplexMatrix::identity(d)) * std::span<const Complex>(alpha);
        c += ComplexMatrix::outer(psi, psi);
    }
    return c;
}

/// Projector onto the eigenvalue (-1)^bit eigenspace of a Pauli axis.
inline ComplexMatrix axis_projector(Pauli axis, int bit) {
    double sign = bit == 0 ? 1.0 : -1.0;
    return (ComplexMatrix::identity(2) + pauli_matrix(axis) * sign) * 0.5;
}

/// Born probabilities Tr[P_o C] from explicit four-qubit projectors.
inline std::vector<double> outcome_probabilities(const ComplexMatrix &choi, const MeasurementSetting &s) {
    std::vector<double> p(16);
    for (std::size_t o = 0; o < 16; ++o) {
        ComplexMatrix proj = axis_projector(s.axes[0], (o >> 3) & 1);
        for (std::size_t k = 1; k < 4; ++k) {
            proj = kron(proj, axis_projector(s.axes[k], (o >> (3 - k)) & 1));
        }
        p[o] = (proj * choi).trace().real();
    }
    return p;
}

/// Minimum number of settings covering all non-identity strings, by
/// breadth-first search over covered-string subsets.
inline std::size_t min_cover_by_bfs(const std::vector<PauliString> &strings) {
    std::vector<PauliString> elements;
    for (const auto &s : strings) {
        if (!s.is_identity()) {
            elements.push_back(s);
        }
    }
    std::size_t n = elements.size();
    if (n == 0) {
        return 0;
    }
    std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<std::uint32_t> masks;
    for (const auto &setting : MeasurementSetting::all()) {
        std::uint32_t m = 0;
        for (std::size_t e = 0; e < n; ++e) {
            if (setting.covers(elements[e])) {
                m |= std::uint32_t{1} << e;
            }
        }
        masks.push_back(m);
    }
    std::vector<int> dist(full + 1, -1);
    std::vector<std::uint32_t> frontier{0};
    dist[0] = 0;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (auto state : frontier) {
            for (auto m : masks) {
                auto s = state | m;
                if (dist[s] < 0) {
                    dist[s] = dist[state] + 1;
                    if (s == full) {
                        return static_cast<std::size_t>(dist[s]);
                    }
                    next.push_back(s);
                }
            }
        }
        frontier = std::move(next);
    }
    return SIZE_MAX;
}

}  // namespace chanwit::oracle

#endif
