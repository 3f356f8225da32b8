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

#include "chanwit/choi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chanwit {

namespace {

double real_checked(Complex z, const char *what) {
    if (std::abs(z.imag()) > 1e-12) {
        throw std::runtime_error(std::string(what) + ": non-real result (imaginary part " +
                                 std::to_string(z.imag()) + ")");
    }
    return z.real();
}

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
    }
}

}  // namespace

std::vector<Complex> max_entangled(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("max_entangled: dimension must be at least 2");
    }
    std::vector<Complex> v(d * d);
    double amp = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::size_t k = 0; k < d; ++k) {
        v[k * d + k] = amp;
    }
    return v;
}

ChoiState::ChoiState(std::size_t dim_in, ComplexMatrix matrix) : dim_in_(dim_in), matrix_(std::move(matrix)) {
    if (matrix_.dim() != dim_in_ * dim_in_) {
        throw std::invalid_argument("ChoiState: matrix must have dimension d^2");
    }
}

double ChoiState::purity() const { return real_checked(hs_inner(matrix_, matrix_), "purity"); }

ComplexMatrix ChoiState::reference_marginal() const {
    std::size_t d = dim_in_;
    ComplexMatrix out(d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            Complex s = 0;
            for (std::size_t k = 0; k < d; ++k) {
                s += matrix_(k * d + r, k * d + c);
            }
            out(r, c) = s;
        }
    }
    return out;
}

ComplexMatrix ChoiState::in_ac_bd_order() const {
    if (dim_in_ != 4) {
        throw std::invalid_argument("in_ac_bd_order: only defined for two-qubit channels");
    }
    return permute_qubits(matrix_, kAbCdToAcBd);
}

ChoiState choi_of(const KrausChannel &ch) {
    // C = (1/d) sum_{ij} M(|i><j|) (x) |i><j|, assembled blockwise.
    std::size_t d = ch.dim();
    if (d < 2) {
        throw std::invalid_argument("choi_of: dimension must be at least 2");
    }
    ComplexMatrix c(d * d);
    double norm = 1.0 / static_cast<double>(d);
    for (const auto &k : ch.kraus()) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                // (K |i><j| K^dagger)_{ab} = K_{ai} conj(K_{bj})
                for (std::size_t a = 0; a < d; ++a) {
                    Complex kai = k(a, i);
                    if (kai == Complex{}) {
                        continue;
                    }
                    for (std::size_t b = 0; b < d; ++b) {
                        c(a * d + i, b * d + j) += norm * kai * std::conj(k(b, j));
                    }
                }
            }
        }
    }
    return ChoiState(d, std::move(c));
}

double overlap_direct(const ChoiState &c1, const ChoiState &c2) {
    require_same_dim(c1.dim_in(), c2.dim_in(), "overlap_direct");
    // Tr[c1 c2] = Tr[c1^dagger c2] for Hermitian c1.
    return real_checked(hs_inner(c1.matrix().adjoint(), c2.matrix()), "overlap_direct");
}

double overlap_kraus(const KrausChannel &m, const KrausChannel &l) {
    require_same_dim(m.dim(), l.dim(), "overlap_kraus");
    double s = 0;
    for (const auto &a : m.kraus()) {
        for (const auto &b : l.kraus()) {
            s += std::norm(hs_inner(a, b));
        }
    }
    double d = static_cast<double>(m.dim());
    return s / (d * d);
}

double overlap_basis(const KrausChannel &m, const KrausChannel &l) {
    require_same_dim(m.dim(), l.dim(), "overlap_basis");
    std::size_t d = m.dim();
    Complex s = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            ComplexMatrix eij(d);
            eij(i, j) = 1.0;
            ComplexMatrix eji(d);
            eji(j, i) = 1.0;
            s += (apply_linear(m, eij) * apply_linear(l, eji)).trace();
        }
    }
    double dd = static_cast<double>(d);
    return real_checked(s, "overlap_basis") / (dd * dd);
}

}  // namespace chanwit
