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

#ifndef PAULIARITH_TRANSFORMS_H
#define PAULIARITH_TRANSFORMS_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliarith/coeff.h"
#include "pauliarith/pauli_operator.h"
#include "pauliarith/pauli_string.h"

namespace pauliarith {

/// Pauli rotation U_P(theta) = exp(-i theta/2 P) = cos(theta/2) I - i sin(theta/2) P.
struct Gate {
    PauliString generator;
    Coefficient angle;
};

/// Gates in application order: gates()[0] acts on the state first, so the
/// circuit unitary is U = U_{n-1} ... U_1 U_0.
class Circuit {
   public:
    explicit Circuit(size_t num_qubits = 0) : num_qubits_(num_qubits) {
    }
    Circuit(size_t num_qubits, std::vector<Gate> gates);

    size_t num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    size_t size() const {
        return gates_.size();
    }
    /// Throws std::invalid_argument on a qubit-count mismatch.
    void append(Gate g);

   private:
    size_t num_qubits_;
    std::vector<Gate> gates_;
};

/// U^dagger h U for U = U_P(theta). Terms commuting with P are untouched; an
/// anticommuting term c Q becomes cos(theta) c Q + i sin(theta) c i^e R with
/// P Q = i^e R. Symbolic angles produce cos/sin expression coefficients.
PauliOperator rotate_conjugate(const PauliOperator &h, const Gate &g);

struct FoldResult {
    PauliOperator folded;
    Circuit remainder;
};

/// Folds the gates at positions >= split_at into h, last gate first, and returns
/// the untouched prefix [0, split_at) as the remainder.
FoldResult fold_circuit(const PauliOperator &h, const Circuit &c, size_t split_at);

/// rotate_conjugate for angles within 1e-9 of a multiple of pi/2, using exact
/// cos/sin values in {0, +-1}; the term count is preserved.
PauliOperator clifford_fold(const PauliOperator &h, const Gate &g);

/// (1 - Z_control) g / 2. Every term of g must act as identity on `control`.
PauliOperator controlled_generator(const PauliOperator &g, size_t control);

/// [h, g] / 4.
///
/// For an anti-Hermitian generator g and a screened gate V(phi) = exp(phi g / 4),
/// the expectation of the result in a state psi is d/dphi <psi|V^dagger h V|psi>
/// at phi = 0. A Pauli rotation U_P(phi) corresponds to g = -2i P.
PauliOperator gradient_operator(const PauliOperator &h, const PauliOperator &g);

/// <0...0| h |0...0>: the sum of coefficients of strings made only of I and Z.
Coefficient zero_state_expectation(const PauliOperator &h);

/// Text format:
///   circuit v1 qubits=<N>
///   rot ; <word> ; <coeff>
void write_circuit(std::ostream &out, const Circuit &c);
Circuit read_circuit(std::istream &in);

}  // namespace pauliarith

#endif
