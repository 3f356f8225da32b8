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

#include "chanwit/witness.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "chanwit/numfmt.hpp"
#include "chanwit/rng.hpp"
#include "json.hpp"

namespace chanwit {

namespace {

constexpr std::size_t kParams = 6;
using Point = std::array<double, kParams>;

// Nelder-Mead maximization. Returns the best value; `x` is updated in place.
double nelder_mead_max(const std::function<double(const Point &)> &f, Point &x, double step, double xtol,
                       std::size_t max_iter) {
    std::array<Point, kParams + 1> simplex;
    std::array<double, kParams + 1> value;
    simplex[0] = x;
    for (std::size_t i = 0; i < kParams; ++i) {
        simplex[i + 1] = x;
        simplex[i + 1][i] += step;
    }
    for (std::size_t i = 0; i <= kParams; ++i) {
        value[i] = f(simplex[i]);
    }
    std::array<std::size_t, kParams + 1> order;
    for (std::size_t it = 0; it < max_iter; ++it) {
        for (std::size_t i = 0; i <= kParams; ++i) {
            order[i] = i;
        }
        // Descending: order[0] is best, order.back() is worst.
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value[a] > value[b]; });
        std::size_t best = order.front();
        std::size_t worst = order.back();
        std::size_t second_worst = order[kParams - 1];

        double diameter = 0;
        for (std::size_t i = 0; i <= kParams; ++i) {
            for (std::size_t k = 0; k < kParams; ++k) {
                diameter = std::max(diameter, std::abs(simplex[i][k] - simplex[best][k]));
            }
        }
        if (diameter < xtol) {
            break;
        }

        Point centroid{};
        for (std::size_t i = 0; i <= kParams; ++i) {
            if (i == worst) {
                continue;
            }
            for (std::size_t k = 0; k < kParams; ++k) {
                centroid[k] += simplex[i][k] / static_cast<double>(kParams);
            }
        }
        auto along = [&](double t) {
            Point p;
            for (std::size_t k = 0; k < kParams; ++k) {
                p[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
            }
            return p;
        };

        Point reflected = along(-1.0);
        double fr = f(reflected);
        if (fr > value[best]) {
            Point expanded = along(-2.0);
            double fe = f(expanded);
            if (fe > fr) {
                simplex[worst] = expanded;
                value[worst] = fe;
            } else {
                simplex[worst] = reflected;
                value[worst] = fr;
            }
            continue;
        }
        if (fr > value[second_worst]) {
            simplex[worst] = reflected;
            value[worst] = fr;
            continue;
        }
        bool outside = fr > value[worst];
        Point contracted = along(outside ? -0.5 : 0.5);
        double fc = f(contracted);
        if (fc > (outside ? fr : value[worst])) {
            simplex[worst] = contracted;
            value[worst] = fc;
            continue;
        }
        for (std::size_t i = 0; i <= kParams; ++i) {
            if (i == best) {
                continue;
            }
            for (std::size_t k = 0; k < kParams; ++k) {
                simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
            }
            value[i] = f(simplex[i]);
        }
    }
    std::size_t best = static_cast<std::size_t>(std::max_element(value.begin(), value.end()) - value.begin());
    x = simplex[best];
    return value[best];
}

void require_two_qubit_unitary(const ComplexMatrix &u, const char *what) {
    if (u.dim() != 4) {
        throw std::invalid_argument(std::string(what) + ": expected a 4x4 unitary");
    }
    if (!is_unitary(u)) {
        throw std::invalid_argument(std::string(what) + ": matrix is not unitary");
    }
}

using StringMask = std::bitset<256>;

struct CoverProblem {
    std::size_t element_count = 0;
    std::vector<MeasurementSetting> candidates;
    std::vector<StringMask> masks;
    StringMask all;
};

CoverProblem make_cover_problem(const PauliDecomposition &d) {
    CoverProblem p;
    std::vector<PauliString> elements;
    for (const auto &t : d.terms) {
        if (!t.string.is_identity()) {
            elements.push_back(t.string);
        }
    }
    p.element_count = elements.size();
    for (std::size_t e = 0; e < elements.size(); ++e) {
        p.all.set(e);
    }
    for (const auto &s : MeasurementSetting::all()) {
        StringMask m;
        for (std::size_t e = 0; e < elements.size(); ++e) {
            if (s.covers(elements[e])) {
                m.set(e);
            }
        }
        if (m.any()) {
            p.candidates.push_back(s);
            p.masks.push_back(m);
        }
    }
    return p;
}

// Can `uncovered` be covered by at most `budget` candidates with index >= first?
bool coverable(const CoverProblem &p, const StringMask &uncovered, std::size_t budget, std::size_t first) {
    if (uncovered.none()) {
        return true;
    }
    if (budget == 0) {
        return false;
    }
    std::size_t best_cover = 0;
    std::size_t branch_element = 0;
    std::size_t branch_options = SIZE_MAX;
    for (std::size_t e = 0; e < p.element_count; ++e) {
        if (!uncovered.test(e)) {
            continue;
        }
        std::size_t options = 0;
        for (std::size_t c = first; c < p.candidates.size(); ++c) {
            if (p.masks[c].test(e)) {
                ++options;
            }
        }
        if (options == 0) {
            return false;
        }
        if (options < branch_options) {
            branch_options = options;
            branch_element = e;
        }
    }
    for (std::size_t c = first; c < p.candidates.size(); ++c) {
        best_cover = std::max(best_cover, (p.masks[c] & uncovered).count());
    }
    // Bound: even the widest candidate repeated `budget` times falls short.
    if (best_cover * budget < uncovered.count()) {
        return false;
    }
    for (std::size_t c = first; c < p.candidates.size(); ++c) {
        if (p.masks[c].test(branch_element) && coverable(p, uncovered & ~p.masks[c], budget - 1, first)) {
            return true;
        }
    }
    return false;
}

std::size_t greedy_cover_size(const CoverProblem &p) {
    StringMask uncovered = p.all;
    std::size_t used = 0;
    while (uncovered.any()) {
        std::size_t best = 0;
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < p.candidates.size(); ++c) {
            std::size_t gain = (p.masks[c] & uncovered).count();
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        uncovered &= ~p.masks[best];
        ++used;
    }
    return used;
}

}  // namespace

ComplexMatrix euler_unitary(double a, double b, double c) {
    // Rz(t) = diag(e^{-it/2}, e^{it/2}); Ry(t) = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
    auto rz = [](double t) {
        return ComplexMatrix{{std::polar(1.0, -t / 2), 0}, {0, std::polar(1.0, t / 2)}};
    };
    ComplexMatrix ry{{std::cos(b / 2), -std::sin(b / 2)}, {std::sin(b / 2), std::cos(b / 2)}};
    return rz(a) * ry * rz(c);
}

double product_overlap(const ComplexMatrix &u, const ComplexMatrix &v, const ComplexMatrix &w) {
    return std::norm(hs_inner(kron(v, w), u)) / 16.0;
}

double beta_sru(const ComplexMatrix &u, const BetaOptions &options) {
    require_two_qubit_unitary(u, "beta_sru");
    auto objective = [&u](const Point &x) {
        return product_overlap(u, euler_unitary(x[0], x[1], x[2]), euler_unitary(x[3], x[4], x[5]));
    };
    Point origin{};
    double best = objective(origin);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::size_t r = 0; r < options.restarts; ++r) {
        auto rng = make_stream(options.seed, r);
        Point x;
        for (auto &xi : x) {
            xi = angle(rng);
        }
        double value = nelder_mead_max(objective, x, 0.5, options.tol, 20000);
        // A second pass from the converged point guards against a collapsed simplex.
        value = std::max(value, nelder_mead_max(objective, x, 0.05, options.tol, 20000));
        best = std::max(best, value);
    }
    return best;
}

Witness build_witness(const ComplexMatrix &u, double beta) {
    require_two_qubit_unitary(u, "build_witness");
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("build_witness: beta must lie in (0, 1]");
    }
    Witness w;
    w.beta = beta;
    w.unitary = u;
    w.matrix = ComplexMatrix::identity(16) * beta - choi_of(unitary_channel(u)).matrix();
    return w;
}

Witness build_witness(GateName gate, double beta) {
    Witness w = build_witness(gate_matrix(gate), beta);
    w.gate = gate;
    return w;
}

std::string PauliTerm::coeff_text() const {
    if (num64) {
        return std::to_string(*num64) + "/64";
    }
    return format_sig(coeff);
}

const PauliTerm *PauliDecomposition::find(const PauliString &p) const {
    for (const auto &t : terms) {
        if (t.string == p) {
            return &t;
        }
    }
    return nullptr;
}

double PauliDecomposition::coefficient(const PauliString &p) const {
    const auto *t = find(p);
    return t ? t->coeff : 0.0;
}

ComplexMatrix PauliDecomposition::reconstruct() const {
    ComplexMatrix m(16);
    for (const auto &t : terms) {
        m += pauli_string_matrix(t.string) * t.coeff;
    }
    return m;
}

PauliDecomposition pauli_decompose(const Witness &w) {
    if (w.matrix.dim() != 16) {
        throw std::invalid_argument("pauli_decompose: witness must be 16x16");
    }
    PauliDecomposition d;
    for (std::size_t i = 0; i < 256; ++i) {
        auto p = PauliString::from_index(i);
        // Pauli strings are Hermitian, so Tr[P W] = hs_inner(P, W).
        double c = hs_inner(pauli_string_matrix(p), w.matrix).real() / 16.0;
        if (std::abs(c) < 1e-12) {
            continue;
        }
        PauliTerm t{p, c, std::nullopt};
        double scaled = c * 64.0;
        double rounded = std::round(scaled);
        if (std::abs(scaled - rounded) < 64.0 * 1e-9) {
            t.num64 = static_cast<std::int64_t>(rounded);
        }
        d.terms.push_back(t);
    }
    return d;
}

MeasurementSetting MeasurementSetting::parse(std::string_view text) {
    if (text.size() != 4) {
        throw std::invalid_argument("measurement setting must have 4 axes, got '" + std::string(text) + "'");
    }
    MeasurementSetting s;
    for (std::size_t k = 0; k < 4; ++k) {
        s.axes[k] = pauli_from_char(text[k]);
        if (s.axes[k] == Pauli::I) {
            throw std::invalid_argument("measurement setting axes must be X, Y or Z");
        }
    }
    return s;
}

std::vector<MeasurementSetting> MeasurementSetting::all() {
    std::vector<MeasurementSetting> out;
    out.reserve(81);
    for (std::size_t i = 0; i < 81; ++i) {
        MeasurementSetting s;
        std::size_t r = i;
        for (std::size_t k = 0; k < 4; ++k) {
            s.axes[3 - k] = static_cast<Pauli>(1 + r % 3);
            r /= 3;
        }
        out.push_back(s);
    }
    return out;
}

bool MeasurementSetting::covers(const PauliString &p) const {
    for (std::size_t k = 0; k < 4; ++k) {
        if (p.labels[k] != Pauli::I && p.labels[k] != axes[k]) {
            return false;
        }
    }
    return true;
}

std::string MeasurementSetting::str() const {
    std::string s;
    for (auto a : axes) {
        s.push_back(pauli_char(a));
    }
    return s;
}

bool cover_exists(const PauliDecomposition &d, std::size_t size) {
    auto p = make_cover_problem(d);
    return coverable(p, p.all, size, 0);
}

std::vector<MeasurementSetting> minimal_settings(const PauliDecomposition &d) {
    auto p = make_cover_problem(d);
    if (p.element_count == 0) {
        return {};
    }
    std::size_t upper = greedy_cover_size(p);
    std::size_t size = 1;
    while (size < upper && !coverable(p, p.all, size, 0)) {
        ++size;
    }
    // Lexicographically smallest cover of the optimal size: take each
    // candidate in order whenever the rest can still be completed from the
    // later candidates.
    std::vector<MeasurementSetting> chosen;
    StringMask uncovered = p.all;
    for (std::size_t c = 0; c < p.candidates.size() && chosen.size() < size; ++c) {
        StringMask rest = uncovered & ~p.masks[c];
        if (coverable(p, rest, size - chosen.size() - 1, c + 1)) {
            chosen.push_back(p.candidates[c]);
            uncovered = rest;
        }
    }
    if (uncovered.any()) {
        throw std::logic_error("minimal_settings: failed to reconstruct an optimal cover");
    }
    return chosen;
}

double expectation(const Witness &w, const KrausChannel &m) {
    if (m.dim() != w.unitary.dim()) {
        throw std::invalid_argument("expectation: channel must act on two qubits");
    }
    return w.beta - overlap_kraus(m, unitary_channel(w.unitary));
}

double expectation_direct(const Witness &w, const KrausChannel &m) {
    if (m.dim() != w.unitary.dim()) {
        throw std::invalid_argument("expectation_direct: channel must act on two qubits");
    }
    return hs_inner(w.matrix, choi_of(m).matrix()).real();
}

std::string decomposition_to_json(const PauliDecomposition &d) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &t : d.terms) {
        doc.push_back({{"coeff", t.coeff_text()}, {"string", t.string.str()}});
    }
    return doc.dump();
}

std::string settings_to_json(std::span<const MeasurementSetting> settings) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto &s : settings) {
        doc.push_back(s.str());
    }
    return doc.dump();
}

}  // namespace chanwit
