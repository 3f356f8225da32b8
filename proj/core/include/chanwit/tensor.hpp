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

#ifndef CHANWIT_TENSOR_HPP
#define CHANWIT_TENSOR_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chanwit {

using Complex = std::complex<double>;

/// Default tolerance for Hermiticity, positivity and trace predicates.
inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix, row-major.
///
/// Qubit-to-index convention throughout the library: for a tensor product of
/// qubits A, B, C, D the leftmost factor (A) owns the most significant bit of
/// the row/column index.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim) { return ComplexMatrix(dim); }
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// |v><w|
    static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

    std::size_t dim() const { return dim_; }
    std::span<const Complex> entries() const { return data_; }

    Complex operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    Complex &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Matrix-vector product.
std::vector<Complex> operator*(const ComplexMatrix &a, std::span<const Complex> v);

/// Kronecker product; the left factor owns the most significant index.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
std::vector<Complex> kron(std::span<const Complex> a, std::span<const Complex> b);

/// Hilbert-Schmidt inner product Tr[A^dagger B].
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest absolute entrywise difference.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTol);
bool is_unitary(const ComplexMatrix &a, double tol = kDefaultTol);

/// Eigenvalues of a Hermitian matrix in ascending order. Throws
/// std::invalid_argument when `a` is not Hermitian within `tol`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol = kDefaultTol);

/// True iff the smallest eigenvalue is >= -tol. Throws std::invalid_argument
/// for non-Hermitian input.
bool is_psd(const ComplexMatrix &a, double tol = kDefaultTol);

/// Hermitian, PSD and unit trace.
bool is_density_matrix(const ComplexMatrix &a, double tol = kDefaultTol);

/// Reorders the qubits of an n-qubit operator. Qubit `perm[k]` of the input
/// becomes qubit `k` of the output.
ComplexMatrix permute_qubits(const ComplexMatrix &a, std::span<const std::size_t> perm);
std::vector<Complex> permute_qubits(std::span<const Complex> v, std::span<const std::size_t> perm);

enum class Pauli : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);
const ComplexMatrix &pauli_matrix(Pauli p);

/// A tensor product of four single-qubit Pauli operators, qubit A first.
struct PauliString {
    std::array<Pauli, 4> labels{Pauli::I, Pauli::I, Pauli::I, Pauli::I};

    static PauliString parse(std::string_view text);
    /// Inverse of `index()`: base-4 digits, qubit A most significant.
    static PauliString from_index(std::size_t index);

    std::size_t index() const;
    std::string str() const;
    bool is_identity() const;

    auto operator<=>(const PauliString &) const = default;
};

/// The 16x16 matrix of a four-qubit Pauli string.
ComplexMatrix pauli_string_matrix(const PauliString &p);

}  // namespace chanwit

#endif
