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

#include "chanwit/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "chanwit/rng.hpp"
#include "json.hpp"

namespace chanwit {

namespace {

bool is_zero(const ComplexMatrix &m) {
    auto e = m.entries();
    return std::all_of(e.begin(), e.end(), [](Complex x) { return x == Complex{}; });
}

void check_probability(double q, const char *name) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument(std::string(name) + ": strength must lie in [0, 1]");
    }
}

// Gram-Schmidt on the columns of a rows x cols matrix stored row-major.
// Produces orthonormal columns with a positive real diagonal in R, which is
// the phase convention that makes the Q factor of a Ginibre matrix Haar.
void orthonormalize_columns(std::vector<Complex> &a, std::size_t rows, std::size_t cols) {
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Complex dot = 0;
            for (std::size_t r = 0; r < rows; ++r) {
                dot += std::conj(a[r * cols + i]) * a[r * cols + j];
            }
            for (std::size_t r = 0; r < rows; ++r) {
                a[r * cols + j] -= dot * a[r * cols + i];
            }
        }
        double norm = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            norm += std::norm(a[r * cols + j]);
        }
        norm = std::sqrt(norm);
        if (norm < 1e-300) {
            throw std::runtime_error("orthonormalize_columns: rank-deficient sample");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            a[r * cols + j] /= norm;
        }
    }
}

std::vector<Complex> ginibre(std::size_t count, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> out(count);
    for (auto &x : out) {
        double re = normal(rng);
        double im = normal(rng);
        x = Complex(re, im);
    }
    return out;
}

}  // namespace

KrausChannel::KrausChannel(std::size_t dim, std::vector<ComplexMatrix> kraus) : dim_(dim) {
    if (dim == 0) {
        throw std::invalid_argument("KrausChannel: dimension must be positive");
    }
    if (kraus.empty()) {
        throw std::invalid_argument("KrausChannel: at least one Kraus operator is required");
    }
    for (const auto &k : kraus) {
        if (k.dim() != dim) {
            throw std::invalid_argument("KrausChannel: Kraus operator of dimension " + std::to_string(k.dim()) +
                                        " in a channel of dimension " + std::to_string(dim));
        }
    }
    kraus_.reserve(kraus.size());
    for (auto &k : kraus) {
        if (!is_zero(k)) {
            kraus_.push_back(std::move(k));
        }
    }
    if (kraus_.empty()) {
        kraus_.push_back(ComplexMatrix::zero(dim));
    }
}

std::string_view gate_label(GateName g) {
    switch (g) {
        case GateName::CNOT:
            return "CNOT";
        case GateName::CZ:
            return "CZ";
        case GateName::H:
            return "H";
        case GateName::X:
            return "X";
        case GateName::Z:
            return "Z";
        case GateName::I:
            return "I";
    }
    return "?";
}

GateName parse_gate(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
    for (auto g : {GateName::CNOT, GateName::CZ, GateName::H, GateName::X, GateName::Z, GateName::I}) {
        if (upper == gate_label(g)) {
            return g;
        }
    }
    throw std::invalid_argument("unknown gate '" + std::string(text) + "'");
}

const ComplexMatrix &gate_matrix(GateName g) {
    static const double s = 1.0 / std::sqrt(2.0);
    static const ComplexMatrix kCnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    static const ComplexMatrix kCz{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}};
    static const ComplexMatrix kH{{s, s}, {s, -s}};
    switch (g) {
        case GateName::CNOT:
            return kCnot;
        case GateName::CZ:
            return kCz;
        case GateName::H:
            return kH;
        case GateName::X:
            return pauli_matrix(Pauli::X);
        case GateName::Z:
            return pauli_matrix(Pauli::Z);
        case GateName::I:
            return pauli_matrix(Pauli::I);
    }
    throw std::invalid_argument("gate_matrix: unknown gate");
}

KrausChannel unitary_channel(const ComplexMatrix &u) { return KrausChannel(u.dim(), {u}); }

KrausChannel identity_channel(std::size_t dim) { return unitary_channel(ComplexMatrix::identity(dim)); }

bool validate_cpt(const KrausChannel &ch, double tol) {
    ComplexMatrix sum(ch.dim());
    for (const auto &k : ch.kraus()) {
        if (k.dim() != ch.dim()) {
            throw std::invalid_argument("validate_cpt: Kraus operator dimension mismatch");
        }
        sum += k.adjoint() * k;
    }
    return max_abs_diff(sum, ComplexMatrix::identity(ch.dim())) <= tol;
}

KrausChannel pauli_channel(double p0, double p1, double p2, double p3) {
    const double p[4] = {p0, p1, p2, p3};
    for (double x : p) {
        if (!(x >= 0.0)) {
            throw std::invalid_argument("pauli_channel: probabilities must be non-negative");
        }
    }
    if (std::abs(p0 + p1 + p2 + p3 - 1.0) > 1e-12) {
        throw std::invalid_argument("pauli_channel: probabilities must sum to 1");
    }
    std::vector<ComplexMatrix> kraus;
    for (int i = 0; i < 4; ++i) {
        if (p[i] > 0.0) {
            kraus.push_back(pauli_matrix(static_cast<Pauli>(i)) * std::sqrt(p[i]));
        }
    }
    return KrausChannel(2, std::move(kraus));
}

KrausChannel depolarising(double q) {
    check_probability(q, "depolarising");
    return pauli_channel(1.0 - 0.75 * q, 0.25 * q, 0.25 * q, 0.25 * q);
}

KrausChannel dephasing(double q) {
    check_probability(q, "dephasing");
    return pauli_channel(1.0 - q, 0.0, 0.0, q);
}

KrausChannel bit_flip(double q) {
    check_probability(q, "bit_flip");
    return pauli_channel(1.0 - q, q, 0.0, 0.0);
}

KrausChannel amplitude_damping(double gamma) {
    check_probability(gamma, "amplitude_damping");
    ComplexMatrix a1{{1, 0}, {0, std::sqrt(1.0 - gamma)}};
    ComplexMatrix a2{{0, std::sqrt(gamma)}, {0, 0}};
    return KrausChannel(2, {std::move(a1), std::move(a2)});
}

KrausChannel tensor(const KrausChannel &a, const KrausChannel &b) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(a.size() * b.size());
    for (const auto &ka : a.kraus()) {
        for (const auto &kb : b.kraus()) {
            kraus.push_back(kron(ka, kb));
        }
    }
    return KrausChannel(a.dim() * b.dim(), std::move(kraus));
}

KrausChannel compose(const KrausChannel &after, const KrausChannel &before) {
    if (after.dim() != before.dim()) {
        throw std::invalid_argument("compose: dimension mismatch");
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(after.size() * before.size());
    for (const auto &a : before.kraus()) {
        for (const auto &b : after.kraus()) {
            kraus.push_back(b * a);
        }
    }
    return KrausChannel(after.dim(), std::move(kraus));
}

ComplexMatrix apply_linear(const KrausChannel &ch, const ComplexMatrix &op) {
    if (op.dim() != ch.dim()) {
        throw std::invalid_argument("apply: operator dimension does not match channel");
    }
    ComplexMatrix out(ch.dim());
    for (const auto &k : ch.kraus()) {
        out += k * op * k.adjoint();
    }
    return out;
}

ComplexMatrix apply(const KrausChannel &ch, const ComplexMatrix &rho) {
    if (rho.dim() != ch.dim()) {
        throw std::invalid_argument("apply: density matrix dimension does not match channel");
    }
    if (!is_density_matrix(rho)) {
        throw std::invalid_argument("apply: input is not a valid density matrix");
    }
    return apply_linear(ch, rho);
}

ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64 &rng) {
    auto a = ginibre(dim * dim, rng);
    orthonormalize_columns(a, dim, dim);
    return ComplexMatrix(dim, std::move(a));
}

KrausChannel sample_sru(std::size_t terms, std::uint64_t seed) {
    if (terms == 0) {
        throw std::invalid_argument("sample_sru: at least one term is required");
    }
    auto rng = make_stream(seed, 0);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(terms);
    double total = 0;
    for (auto &x : p) {
        x = expo(rng);
        total += x;
    }
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        auto v = haar_unitary(2, rng);
        auto w = haar_unitary(2, rng);
        kraus.push_back(kron(v, w) * std::sqrt(p[k] / total));
    }
    return KrausChannel(4, std::move(kraus));
}

KrausChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed) {
    if (kraus_count == 0) {
        throw std::invalid_argument("random_channel: at least one Kraus operator is required");
    }
    auto rng = make_stream(seed, 1);
    std::size_t rows = kraus_count * dim;
    auto iso = ginibre(rows * dim, rng);
    orthonormalize_columns(iso, rows, dim);
    std::vector<ComplexMatrix> kraus;
    for (std::size_t k = 0; k < kraus_count; ++k) {
        ComplexMatrix m(dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                m(r, c) = iso[(k * dim + r) * dim + c];
            }
        }
        kraus.push_back(std::move(m));
    }
    return KrausChannel(dim, std::move(kraus));
}

std::string channel_to_json(const KrausChannel &ch) {
    nlohmann::json kraus = nlohmann::json::array();
    for (const auto &k : ch.kraus()) {
        nlohmann::json entries = nlohmann::json::array();
        for (auto x : k.entries()) {
            entries.push_back({x.real(), x.imag()});
        }
        kraus.push_back(std::move(entries));
    }
    nlohmann::json doc{{"dim", ch.dim()}, {"kraus", std::move(kraus)}};
    return doc.dump();
}

KrausChannel channel_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("channel JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("kraus") || !doc["kraus"].is_array()) {
        throw std::invalid_argument("channel JSON: expected {\"dim\": n, \"kraus\": [...]}");
    }
    auto dim = doc["dim"].get<std::size_t>();
    std::vector<ComplexMatrix> kraus;
    for (const auto &k : doc["kraus"]) {
        if (!k.is_array() || k.size() != dim * dim) {
            throw std::invalid_argument("channel JSON: Kraus operator must list dim*dim entries");
        }
        std::vector<Complex> entries;
        entries.reserve(dim * dim);
        for (const auto &x : k) {
            if (!x.is_array() || x.size() != 2) {
                throw std::invalid_argument("channel JSON: entries must be [re, im] pairs");
            }
            entries.emplace_back(x[0].get<double>(), x[1].get<double>());
        }
        kraus.emplace_back(dim, std::move(entries));
    }
    return KrausChannel(dim, std::move(kraus));
}

}  // namespace chanwit
