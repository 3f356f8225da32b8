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

#include "chanwit/tensor.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chanwit {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()) + ")");
    }
}

std::size_t qubit_count(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        ++n;
    }
    if ((std::size_t{1} << n) != dim) {
        throw std::invalid_argument("permute_qubits: dimension " + std::to_string(dim) + " is not a power of two");
    }
    return n;
}

// Maps an output basis index to the input basis index it reads from.
std::vector<std::size_t> qubit_index_map(std::size_t dim, std::span<const std::size_t> perm) {
    std::size_t n = qubit_count(dim);
    if (perm.size() != n) {
        throw std::invalid_argument("permute_qubits: permutation length does not match qubit count");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) {
            throw std::invalid_argument("permute_qubits: not a permutation");
        }
        seen[p] = true;
    }
    std::vector<std::size_t> map(dim);
    for (std::size_t out = 0; out < dim; ++out) {
        std::size_t in = 0;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t bit = (out >> (n - 1 - k)) & 1;
            in |= bit << (n - 1 - perm[k]);
        }
        map[out] = in;
    }
    return map;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match dim*dim");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("ComplexMatrix: rows must form a square matrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
    if (v.size() != w.size()) {
        throw std::invalid_argument("outer: vector lengths differ");
    }
    ComplexMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < w.size(); ++c) {
            m(r, c) = v[r] * std::conj(w[c]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= rhs.data_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (auto &x : data_) {
        x *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator*");
    std::size_t n = a.dim();
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex ark = a(r, k);
            if (ark == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) += ark * b(k, c);
            }
        }
    }
    return m;
}

std::vector<Complex> operator*(const ComplexMatrix &a, std::span<const Complex> v) {
    if (a.dim() != v.size()) {
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    }
    std::vector<Complex> out(v.size());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    std::size_t na = a.dim();
    std::size_t nb = b.dim();
    ComplexMatrix m(na * nb);
    for (std::size_t ra = 0; ra < na; ++ra) {
        for (std::size_t ca = 0; ca < na; ++ca) {
            Complex x = a(ra, ca);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) {
                    m(ra * nb + rb, ca * nb + cb) = x * b(rb, cb);
                }
            }
        }
    }
    return m;
}

std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b) {
    std::vector<Complex> out;
    out.reserve(a.size() * b.size());
    for (auto x : a) {
        for (auto y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "hs_inner");
    Complex t = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        t += std::conj(ea[i]) * eb[i];
    }
    return t;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        m = std::max(m, std::abs(ea[i] - eb[i]));
    }
    return m;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = r; c < a.dim(); ++c) {
            if (std::abs(a(r, c) - std::conj(a(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    return max_abs_diff(a.adjoint() * a, ComplexMatrix::identity(a.dim())) <= tol;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol) {
    if (!is_hermitian(a, tol)) {
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian");
    }
    std::size_t n = a.dim();
    Eigen::MatrixXcd m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigen-decomposition failed");
    }
    const auto &ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

bool is_psd(const ComplexMatrix &a, double tol) {
    if (!is_hermitian(a, tol)) {
        throw std::invalid_argument("is_psd: matrix is not Hermitian");
    }
    if (a.dim() == 0) {
        return true;
    }
    return hermitian_eigenvalues(a, tol).front() >= -tol;
}

bool is_density_matrix(const ComplexMatrix &a, double tol) {
    return a.dim() > 0 && is_hermitian(a, tol) && std::abs(a.trace() - 1.0) <= tol && is_psd(a, tol);
}

ComplexMatrix permute_qubits(const ComplexMatrix &a, std::span<const std::size_t> perm) {
    auto map = qubit_index_map(a.dim(), perm);
    ComplexMatrix m(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            m(r, c) = a(map[r], map[c]);
        }
    }
    return m;
}

std::vector<Complex> permute_qubits(std::span<const Complex> v, std::span<const std::size_t> perm) {
    auto map = qubit_index_map(v.size(), perm);
    std::vector<Complex> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = v[map[i]];
    }
    return out;
}

char pauli_char(Pauli p) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
        default:
            throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
    }
}

const ComplexMatrix &pauli_matrix(Pauli p) {
    static const std::array<ComplexMatrix, 4> kMatrices{
        ComplexMatrix{{1, 0}, {0, 1}},
        ComplexMatrix{{0, 1}, {1, 0}},
        ComplexMatrix{{0, Complex(0, -1)}, {Complex(0, 1), 0}},
        ComplexMatrix{{1, 0}, {0, -1}},
    };
    return kMatrices[static_cast<int>(p)];
}

PauliString PauliString::parse(std::string_view text) {
    if (text.size() != 4) {
        throw std::invalid_argument("Pauli string must have 4 labels, got '" + std::string(text) + "'");
    }
    PauliString p;
    for (std::size_t k = 0; k < 4; ++k) {
        p.labels[k] = pauli_from_char(text[k]);
    }
    return p;
}

PauliString PauliString::from_index(std::size_t index) {
    if (index >= 256) {
        throw std::invalid_argument("Pauli string index out of range");
    }
    PauliString p;
    for (std::size_t k = 0; k < 4; ++k) {
        p.labels[3 - k] = static_cast<Pauli>(index & 3);
        index >>= 2;
    }
    return p;
}

std::size_t PauliString::index() const {
    std::size_t i = 0;
    for (auto l : labels) {
        i = i * 4 + static_cast<std::size_t>(l);
    }
    return i;
}

std::string PauliString::str() const {
    std::string s;
    for (auto l : labels) {
        s.push_back(pauli_char(l));
    }
    return s;
}

bool PauliString::is_identity() const {
    return std::all_of(labels.begin(), labels.end(), [](Pauli l) { return l == Pauli::I; });
}

ComplexMatrix pauli_string_matrix(const PauliString &p) {
    ComplexMatrix m = pauli_matrix(p.labels[0]);
    for (std::size_t k = 1; k < 4; ++k) {
        m = kron(m, pauli_matrix(p.labels[k]));
    }
    return m;
}

}  // namespace chanwit
