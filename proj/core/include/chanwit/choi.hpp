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

#ifndef CHANWIT_CHOI_HPP
#define CHANWIT_CHOI_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "chanwit/channels.hpp"
#include "chanwit/tensor.hpp"

namespace chanwit {

/// (1/sqrt(d)) sum_k |k>|k> on H (x) H, system factor first.
std::vector<Complex> max_entangled(std::size_t d);

/// Qubit reordering (A,B,C,D) -> (A,C,B,D). It is an involution, so the
/// same permutation maps the AC|BD pairing back to channel|reference order.
inline constexpr std::array<std::size_t, 4> kAbCdToAcBd{0, 2, 1, 3};

/// Choi state (M (x) id)[|alpha><alpha|] of a channel with input dimension d.
/// The first tensor factor is the channel output, the second the untouched
/// reference; for two-qubit channels the qubits are ordered A, B, C, D.
class ChoiState {
   public:
    ChoiState(std::size_t dim_in, ComplexMatrix matrix);

    std::size_t dim_in() const { return dim_in_; }
    const ComplexMatrix &matrix() const { return matrix_; }

    double purity() const;
    /// Reduced state of the reference factor; I/d for any trace-preserving map.
    ComplexMatrix reference_marginal() const;
    /// Same operator with qubits reordered as (A,C,B,D). Only for d = 4.
    ComplexMatrix in_ac_bd_order() const;

   private:
    std::size_t dim_in_;
    ComplexMatrix matrix_;
};

ChoiState choi_of(const KrausChannel &ch);

/// Tr[c1 c2]. Throws std::runtime_error if the trace has an imaginary part
/// above 1e-12, which cannot happen for Hermitian operands.
double overlap_direct(const ChoiState &c1, const ChoiState &c2);

/// (1/d^2) sum_{k,l} |Tr[A_k^dagger B_l]|^2.
double overlap_kraus(const KrausChannel &m, const KrausChannel &l);

/// (1/d^2) sum_{i,j} Tr[M(|i><j|) L(|j><i|)].
double overlap_basis(const KrausChannel &m, const KrausChannel &l);

}  // namespace chanwit

#endif
