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

#include "pauliarith/dense_oracle.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace pauliarith {

namespace {

void check_qubits(size_t n, size_t limit) {
    if (n > limit) {
        throw std::invalid_argument("dense oracle limited to " + std::to_string(limit) + " qubits, got " +
                                    std::to_string(n));
    }
}

void check_dims(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
}

}  // namespace

DenseMatrix::DenseMatrix(size_t dim) : dim_(dim) {
    if (dim == 0 || !std::has_single_bit(dim) || dim > (size_t{1} << kMaxDenseQubits)) {
        throw std::invalid_argument("DenseMatrix dimension must be a power of two <= 2^12");
    }
    data_.assign(dim * dim, Complex{0, 0});
}

DenseMatrix DenseMatrix::identity(size_t dim) {
    DenseMatrix m(dim);
    for (size_t i = 0; i < dim; ++i) {
        m(i, i) = 1;
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &other) const {
    check_dims(*this, other);
    DenseMatrix out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        for (size_t k = 0; k < dim_; ++k) {
            Complex a = (*this)(i, k);
            if (a == Complex{0, 0}) {
                continue;
            }
            for (size_t j = 0; j < dim_; ++j) {
                out(i, j) += a * other(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &other) const {
    check_dims(*this, other);
    DenseMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] += other.data_[i];
    }
    return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix &other) const {
    return *this + other.scaled(-1.0);
}

DenseMatrix DenseMatrix::scaled(Complex s) const {
    DenseMatrix out = *this;
    for (auto &v : out.data_) {
        v *= s;
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        for (size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    check_dims(a, b);
    double worst = 0;
    for (size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); ++i) {
        for (size_t j = 0; j < a.dim(); ++j) {
            for (size_t k = 0; k < b.dim(); ++k) {
                for (size_t l = 0; l < b.dim(); ++l) {
                    out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

DenseMatrix commutator(const DenseMatrix &a, const DenseMatrix &b) {
    return a * b - b * a;
}

DenseMatrix pauli_matrix(Pauli letter) {
    DenseMatrix m(2);
    switch (letter) {
        case Pauli::I:
            m(0, 0) = 1;
            m(1, 1) = 1;
            break;
        case Pauli::X:
            m(0, 1) = 1;
            m(1, 0) = 1;
            break;
        case Pauli::Y:
            m(0, 1) = Complex{0, -1};
            m(1, 0) = Complex{0, 1};
            break;
        case Pauli::Z:
            m(0, 0) = 1;
            m(1, 1) = -1;
            break;
    }
    return m;
}

DenseMatrix to_matrix(const PauliString &p) {
    check_qubits(p.num_qubits(), kMaxDenseQubits);
    if (p.num_qubits() == 0) {
        return DenseMatrix::identity(1);
    }
    DenseMatrix out = pauli_matrix(p[0]);
    for (size_t q = 1; q < p.num_qubits(); ++q) {
        out = kron(out, pauli_matrix(p[q]));
    }
    return out;
}

DenseMatrix op_to_matrix(const PauliOperator &h) {
    check_qubits(h.num_qubits(), kMaxDenseQubits);
    DenseMatrix out(size_t{1} << h.num_qubits());
    for (const auto &[string, c] : h.sorted_terms()) {
        if (c.is_symbolic()) {
            throw std::invalid_argument("op_to_matrix: symbolic coefficient " + to_string(c));
        }
        out = out + to_matrix(string).scaled(c.numeric());
    }
    return out;
}

DenseMatrix rotation_matrix(const Gate &g) {
    if (g.angle.is_symbolic()) {
        throw std::invalid_argument("rotation_matrix: symbolic angle " + to_string(g.angle));
    }
    Complex theta = g.angle.numeric();
    DenseMatrix p = to_matrix(g.generator);
    return DenseMatrix::identity(p.dim()).scaled(std::cos(theta / 2.0)) +
           p.scaled(Complex{0, -1} * std::sin(theta / 2.0));
}

DenseMatrix circuit_matrix(const Circuit &c) {
    check_qubits(c.num_qubits(), kMaxDenseQubits);
    DenseMatrix u = DenseMatrix::identity(size_t{1} << c.num_qubits());
    for (const auto &g : c.gates()) {
        u = rotation_matrix(g) * u;
    }
    return u;
}

size_t matrix_closure(const std::vector<DenseMatrix> &generators) {
    if (generators.empty()) {
        return 0;
    }
    size_t dim = generators[0].dim();
    check_qubits(std::countr_zero(dim), 5);
    constexpr double tol = 1e-9;

    // Real vectorization of a complex matrix: (re, im) interleaved.
    auto vectorize = [](const DenseMatrix &m) {
        std::vector<double> v;
        v.reserve(2 * m.data().size());
        for (auto z : m.data()) {
            v.push_back(z.real());
            v.push_back(z.imag());
        }
        return v;
    };

    std::vector<std::vector<double>> orthonormal;
    std::vector<DenseMatrix> elements;
    auto try_add = [&](const DenseMatrix &m) {
        auto v = vectorize(m);
        double norm0 = 0;
        for (double x : v) {
            norm0 += x * x;
        }
        norm0 = std::sqrt(norm0);
        if (norm0 <= tol) {
            return;
        }
        // Two Gram-Schmidt passes for stability.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &u : orthonormal) {
                double dot = 0;
                for (size_t i = 0; i < v.size(); ++i) {
                    dot += u[i] * v[i];
                }
                for (size_t i = 0; i < v.size(); ++i) {
                    v[i] -= dot * u[i];
                }
            }
        }
        double norm = 0;
        for (double x : v) {
            norm += x * x;
        }
        norm = std::sqrt(norm);
        if (norm <= tol * norm0) {
            return;
        }
        for (double &x : v) {
            x /= norm;
        }
        orthonormal.push_back(std::move(v));
        elements.push_back(m);
    };

    for (const auto &g : generators) {
        if (g.dim() != dim) {
            throw std::invalid_argument("matrix_closure: generator dimension mismatch");
        }
        try_add(g.scaled(Complex{0, 1}));
    }
    for (size_t k = 0; k < elements.size(); ++k) {
        for (size_t j = 0; j < k; ++j) {
            try_add(commutator(elements[j], elements[k]));
        }
    }
    return elements.size();
}

Complex expectation(const DenseMatrix &m, const std::vector<Complex> &state) {
    if (state.size() != m.dim()) {
        throw std::invalid_argument("expectation: state size mismatch");
    }
    Complex total{0, 0};
    for (size_t i = 0; i < m.dim(); ++i) {
        Complex row{0, 0};
        for (size_t j = 0; j < m.dim(); ++j) {
            row += m(i, j) * state[j];
        }
        total += std::conj(state[i]) * row;
    }
    return total;
}

}  // namespace pauliarith
