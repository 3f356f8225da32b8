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

#ifndef CHANWIT_WITNESS_HPP
#define CHANWIT_WITNESS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chanwit/channels.hpp"
#include "chanwit/choi.hpp"
#include "chanwit/tensor.hpp"

namespace chanwit {

/// Detection operator beta*I - C_U for a two-qubit unitary U.
///
/// A negative expectation Tr[W C_M] certifies that the channel M is not a
/// separable random-unitary channel.
struct Witness {
    double beta = 0;
    ComplexMatrix unitary;
    std::optional<GateName> gate;
    ComplexMatrix matrix;
};

struct BetaOptions {
    std::size_t restarts = 200;
    std::uint64_t seed = 0;
    /// Simplex-diameter stopping tolerance of each local refinement, radians.
    double tol = 1e-8;
};

/// Single-qubit unitary Rz(a) Ry(b) Rz(c); covers SU(2), which is all of
/// U(2) up to the global phase that cancels in |Tr|^2.
ComplexMatrix euler_unitary(double a, double b, double c);

/// Squared overlap (1/16)|Tr[(V (x) W)^dagger U]|^2 between the Choi vector of U
/// and the product-unitary Choi vector of V (x) W.
double product_overlap(const ComplexMatrix &u, const ComplexMatrix &v, const ComplexMatrix &w);

/// Maximum of `product_overlap` over local unitaries V, W: multi-start
/// Nelder-Mead over two sets of Euler angles. Each restart draws its start
/// from its own RNG stream (seed, restart index); the identity start is
/// always evaluated as well. Throws std::invalid_argument unless U is a 4x4
/// unitary.
double beta_sru(const ComplexMatrix &u, const BetaOptions &options = {});

/// Throws std::invalid_argument unless 0 < beta <= 1 and U is a 4x4 unitary.
Witness build_witness(const ComplexMatrix &u, double beta);
Witness build_witness(GateName gate, double beta);

struct PauliTerm {
    PauliString string;
    double coeff = 0;
    /// Numerator n when coeff equals n/64 to within 1e-9.
    std::optional<std::int64_t> num64;

    /// "n/64" when exact, otherwise a 12-significant-digit decimal.
    std::string coeff_text() const;
};

struct PauliDecomposition {
    std::vector<PauliTerm> terms;

    /// Zero for strings without a term.
    double coefficient(const PauliString &p) const;
    const PauliTerm *find(const PauliString &p) const;
    ComplexMatrix reconstruct() const;
};

/// Coefficients Tr[P W]/16 over the 256 four-qubit Pauli strings; strings
/// whose coefficient is below 1e-12 in magnitude are omitted. Terms are in
/// ascending string order (I < X < Y < Z, qubit A first).
PauliDecomposition pauli_decompose(const Witness &w);

/// One local measurement configuration: a Pauli axis for each qubit.
struct MeasurementSetting {
    std::array<Pauli, 4> axes{Pauli::Z, Pauli::Z, Pauli::Z, Pauli::Z};

    static MeasurementSetting parse(std::string_view text);
    /// The 81 settings in lexicographic order (X < Y < Z).
    static std::vector<MeasurementSetting> all();

    /// Every non-identity factor of p agrees with this setting's axis.
    bool covers(const PauliString &p) const;
    std::string str() const;

    auto operator<=>(const MeasurementSetting &) const = default;
};

/// Exact minimum set of settings covering every non-identity term of the
/// decomposition, found by branch-and-bound. Among minimum covers, returns
/// the lexicographically smallest one, sorted.
std::vector<MeasurementSetting> minimal_settings(const PauliDecomposition &d);

/// Whether some choice of at most `size` settings covers every non-identity
/// term. Exhaustive; used to certify lower bounds.
bool cover_exists(const PauliDecomposition &d, std::size_t size);

/// Tr[W C_M] = beta - (1/16) sum_k |Tr[A_k U^dagger]|^2, the Kraus route.
double expectation(const Witness &w, const KrausChannel &m);

/// Tr[W C_M] computed from the 16x16 matrices.
double expectation_direct(const Witness &w, const KrausChannel &m);

/// [{"coeff": "n/64", "string": "IXIX"}, ...]
std::string decomposition_to_json(const PauliDecomposition &d);
/// ["XXXX", ...]
std::string settings_to_json(std::span<const MeasurementSetting> settings);

}  // namespace chanwit

#endif
