// Copyright 2026 The pauliarith Authors
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

#ifndef PAULIARITH_DENSE_ORACLE_H
#define PAULIARITH_DENSE_ORACLE_H

#include <vector>

#include "pauliarith/coeff.h"
#include "pauliarith/pauli_operator.h"
#include "pauliarith/pauli_string.h"
#include "pauliarith/transforms.h"

namespace pauliarith {

// Brute-force reference matrices for small qubit counts. Qubit 0 is the leftmost
// Kronecker factor, i.e. the most significant bit of the row/column index.

inline constexpr size_t kMaxDenseQubits = 12;

class DenseMatrix {
   public:
    DenseMatrix() = default;
    /// Zero matrix of size dim x dim; dim must be a power of two no larger than 2^12.
    explicit DenseMatrix(size_t dim);
    static DenseMatrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t row, size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(size_t row, size_t col) const {
        return data_[row * dim_ + col];
    }
    const std::vector<Complex> &data() const {
        return data_;
    }

    DenseMatrix operator*(const DenseMatrix &other) const;
    DenseMatrix operator+(const DenseMatrix &other) const;
    DenseMatrix operator-(const DenseMatrix &other) const;
    DenseMatrix scaled(Complex s) const;
    DenseMatrix adjoint() const;
    /// Exact entrywise comparison.
    bool operator==(const DenseMatrix &other) const = default;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b);
DenseMatrix commutator(const DenseMatrix &a, const DenseMatrix &b);

/// The 2x2 matrix of a single Pauli letter.
DenseMatrix pauli_matrix(Pauli letter);

DenseMatrix to_matrix(const PauliString &p);
/// Throws std::invalid_argument on symbolic coefficients.
DenseMatrix op_to_matrix(const PauliOperator &h);
/// cos(theta/2) I - i sin(theta/2) P for a numeric angle.
DenseMatrix rotation_matrix(const Gate &g);
/// Product of rotation matrices with gate 0 applied first (rightmost).
DenseMatrix circuit_matrix(const Circuit &c);

/// Dimension of the real Lie algebra generated by i * generators under nested
/// commutators, via vectorization and Gram-Schmidt rank tests (tolerance 1e-9).
/// Limited to 5 qubits.
size_t matrix_closure(const std::vector<DenseMatrix> &generators);

/// <psi| M |psi> for a state vector.
Complex expectation(const DenseMatrix &m, const std::vector<Complex> &state);

}  // namespace pauliarith

#endif
