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

#ifndef PAULIARITH_PAULI_OPERATOR_H
#define PAULIARITH_PAULI_OPERATOR_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "pauliarith/coeff.h"
#include "pauliarith/pauli_string.h"

namespace pauliarith {

inline constexpr double kDefaultPruneTol = 1e-12;

/// A linear combination sum_k c_k P_k of Pauli strings on a fixed qubit count.
///
/// Terms whose coefficient is zero (|c| <= prune tolerance for numeric values)
/// are never stored. Iteration over `terms()` is unordered; `sorted_terms()`
/// gives the canonical key order used for serialization.
class PauliOperator {
   public:
    using TermMap = absl::flat_hash_map<PauliString, Coefficient, PauliStringHash>;
    using Term = std::pair<PauliString, Coefficient>;

    explicit PauliOperator(size_t num_qubits = 0) : num_qubits_(num_qubits) {
    }
    /// Accumulates repeated strings, then prunes.
    PauliOperator(size_t num_qubits, std::vector<Term> terms, double prune_tol = kDefaultPruneTol);

    /// Takes ownership of an accumulated map, dropping zero terms. Throws if any
    /// key has the wrong qubit count.
    PauliOperator(size_t num_qubits, TermMap terms, double prune_tol = kDefaultPruneTol);

    /// Single-term operator.
    static PauliOperator term(PauliString string, Coefficient coefficient = 1.0);
    /// Parses `<word>` with the given qubit count into a single term.
    static PauliOperator term(std::string_view word, size_t num_qubits, Coefficient coefficient = 1.0);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    const TermMap &terms() const {
        return terms_;
    }
    std::vector<Term> sorted_terms() const;
    /// Zero when absent.
    Coefficient coefficient(const PauliString &string) const;
    bool is_numeric() const;

    /// Adds c to the coefficient of `string` and drops the term if it becomes zero.
    void add_term(const PauliString &string, const Coefficient &c, double prune_tol = kDefaultPruneTol);

    /// Same keys and structurally equal coefficients.
    bool operator==(const PauliOperator &other) const;

   private:
    size_t num_qubits_;
    TermMap terms_;
};

struct MulOptions {
    /// Worker threads for the pairwise product loop; 1 runs sequentially.
    unsigned threads = 1;
    double prune_tol = kDefaultPruneTol;
    /// If set, receives the largest accumulation-map size seen (before pruning).
    size_t *peak_terms = nullptr;
};

PauliOperator op_add(const PauliOperator &a, const PauliOperator &b);
PauliOperator scalar_mul(const Coefficient &s, const PauliOperator &a);
PauliOperator op_mul(const PauliOperator &a, const PauliOperator &b, MulOptions options = {});
PauliOperator dagger(const PauliOperator &a);
/// [a, b] built from the fast string commutator; commuting term pairs are skipped.
PauliOperator op_commutator(const PauliOperator &a, const PauliOperator &b);

/// Throw std::invalid_argument when any coefficient is symbolic.
bool is_hermitian(const PauliOperator &a, double tol = kDefaultPruneTol);
bool is_anti_hermitian(const PauliOperator &a, double tol = kDefaultPruneTol);

PauliOperator prune(const PauliOperator &a, double tol = kDefaultPruneTol);
PauliOperator substitute_all(const PauliOperator &a, const Bindings &bindings);
PauliOperator differentiate_all(const PauliOperator &a, std::string_view param);

/// Largest |c_P - c'_P| over the union of keys; both operators must be numeric.
double max_coefficient_distance(const PauliOperator &a, const PauliOperator &b);

inline PauliOperator operator+(const PauliOperator &a, const PauliOperator &b) {
    return op_add(a, b);
}
inline PauliOperator operator-(const PauliOperator &a, const PauliOperator &b) {
    return op_add(a, scalar_mul(-1.0, b));
}
inline PauliOperator operator*(const PauliOperator &a, const PauliOperator &b) {
    return op_mul(a, b);
}
inline PauliOperator operator*(const Coefficient &s, const PauliOperator &a) {
    return scalar_mul(s, a);
}

/// Text format:
///   pauli-op v1 qubits=<N>
///   <coeff> ; <word>
/// one line per term in canonical key order.
void write_operator(std::ostream &out, const PauliOperator &op);
PauliOperator read_operator(std::istream &in);
std::string to_text(const PauliOperator &op);
PauliOperator from_text(std::string_view text);

}  // namespace pauliarith

#endif
