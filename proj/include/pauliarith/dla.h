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

#ifndef PAULIARITH_DLA_H
#define PAULIARITH_DLA_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "pauliarith/coeff.h"
#include "pauliarith/pauli_operator.h"
#include "pauliarith/pauli_string.h"

namespace pauliarith {

/// Basis of a dynamical Lie algebra spanned by single Pauli strings.
///
/// Elements are stored as Hermitian strings P; the corresponding anti-Hermitian
/// algebra element is iP. Membership depends on the string alone, never on phase.
class DlaBasis {
   public:
    explicit DlaBasis(size_t num_qubits) : num_qubits_(num_qubits) {
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dimension() const {
        return elements_.size();
    }
    const std::vector<PauliString> &elements() const {
        return elements_;
    }
    std::optional<size_t> index_of(const PauliString &p) const;

    /// Appends p unless already present; returns its position.
    size_t insert(const PauliString &p);

   private:
    size_t num_qubits_;
    std::vector<PauliString> elements_;
    absl::flat_hash_map<PauliString, size_t, PauliStringHash> index_;
};

/// Closure under commutators. Output order: deduplicated generators in input order,
/// then elements in discovery order. Throws std::invalid_argument for an empty
/// input, mixed qubit counts, or an identity generator.
DlaBasis lie_closure(const std::vector<PauliString> &generators);
/// Same, but accepts operators; each must be a single Pauli string term.
DlaBasis lie_closure(const std::vector<PauliOperator> &generators);

/// One nonzero entry f_{alpha beta}^gamma of [h_alpha, h_beta] = sum_gamma f h_gamma.
struct StructureConstant {
    size_t alpha;
    size_t beta;
    size_t gamma;
    Complex value;  // +-2i in the Hermitian-basis convention

    /// The same constant for the anti-Hermitian basis h = iP: [iP_a, iP_b] = f' iP_c
    /// with f' = i f, which is real (+-2).
    double antihermitian_value() const {
        return (Complex{0, 1} * value).real();
    }
    bool operator==(const StructureConstant &) const = default;
};

/// Sparse tensor sorted ascending by (alpha, beta). Throws std::invalid_argument if
/// a commutator lands outside the basis.
std::vector<StructureConstant> structure_constants(const DlaBasis &basis);

/// {X_i X_{i+1} : i < n-1} followed by {Z_i : i < n}; generates a DLA isomorphic
/// to so(2n). Throws std::invalid_argument for n < 2.
std::vector<PauliString> build_so2n_generators(size_t n);

/// CSV "alpha,beta,gamma,re,im" with a header line.
void write_structure_constants_csv(std::ostream &out, const std::vector<StructureConstant> &constants);
/// One word per line in basis order.
void write_basis(std::ostream &out, const DlaBasis &basis);

}  // namespace pauliarith

#endif
