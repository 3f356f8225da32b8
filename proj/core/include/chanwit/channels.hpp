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

#ifndef CHANWIT_CHANNELS_HPP
#define CHANWIT_CHANNELS_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "chanwit/tensor.hpp"

namespace chanwit {

/// A CPT map in Kraus form, rho -> sum_k A_k rho A_k^dagger.
///
/// Construction checks shapes only; completeness is tested by
/// `validate_cpt`. Kraus operators that are exactly zero are dropped.
class KrausChannel {
   public:
    KrausChannel(std::size_t dim, std::vector<ComplexMatrix> kraus);

    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix> &kraus() const { return kraus_; }
    std::size_t size() const { return kraus_.size(); }

   private:
    std::size_t dim_;
    std::vector<ComplexMatrix> kraus_;
};

enum class GateName { CNOT, CZ, H, X, Z, I };

std::string_view gate_label(GateName g);
/// Accepts the labels case-insensitively ("cnot", "CZ", ...).
GateName parse_gate(std::string_view text);
/// Fixed matrices; CNOT and CZ take qubit A as control.
const ComplexMatrix &gate_matrix(GateName g);

KrausChannel unitary_channel(const ComplexMatrix &u);
KrausChannel identity_channel(std::size_t dim);

/// True iff max |sum_k A_k^dagger A_k - I| <= tol.
bool validate_cpt(const KrausChannel &ch, double tol = kDefaultTol);

/// Single-qubit channel sum_i p_i sigma_i rho sigma_i with Kraus set
/// {sqrt(p_i) sigma_i}. Throws for negative or non-normalized input.
KrausChannel pauli_channel(double p0, double p1, double p2, double p3);

KrausChannel depolarising(double q);
KrausChannel dephasing(double q);
KrausChannel bit_flip(double q);
KrausChannel amplitude_damping(double gamma);

/// Channel on the tensor product space; Kraus set is all pairwise kron.
KrausChannel tensor(const KrausChannel &a, const KrausChannel &b);

/// The composition after o before. Kraus set {B_j A_i}.
KrausChannel compose(const KrausChannel &after, const KrausChannel &before);

/// Applies the channel to a density matrix. Throws std::invalid_argument
/// unless rho is a valid density matrix of matching dimension.
ComplexMatrix apply(const KrausChannel &ch, const ComplexMatrix &rho);

/// Applies the Kraus sum to an arbitrary operator without validation.
ComplexMatrix apply_linear(const KrausChannel &ch, const ComplexMatrix &op);

/// Haar-random unitary of the given dimension, from QR of a complex
/// Gaussian matrix with the phases of R's diagonal fixed.
ComplexMatrix haar_unitary(std::size_t dim, std::mt19937_64 &rng);

/// Random separable random-unitary channel on two qubits:
/// Kraus set {sqrt(p_k) (V_k (x) W_k)}, V_k and W_k Haar-random, p uniform on
/// the simplex. Deterministic for a fixed seed.
KrausChannel sample_sru(std::size_t terms, std::uint64_t seed);

/// Random CPT map with `kraus_count` operators, obtained by slicing a
/// Haar-like random isometry. Used for property tests.
KrausChannel random_channel(std::size_t dim, std::size_t kraus_count, std::uint64_t seed);

/// JSON encoding {"dim": n, "kraus": [[[re, im], ...], ...]}; each Kraus
/// operator is a flat row-major list of n*n complex pairs.
std::string channel_to_json(const KrausChannel &ch);
KrausChannel channel_from_json(std::string_view text);

}  // namespace chanwit

#endif
