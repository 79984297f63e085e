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

#ifndef PAULIARITH_CLIQUES_H
#define PAULIARITH_CLIQUES_H

#include <iosfwd>
#include <vector>

#include "pauliarith/pauli_operator.h"
#include "pauliarith/pauli_string.h"

namespace pauliarith {

/// Groups of an operator's strings that pairwise commute (full commutation, not
/// qubit-wise).
struct CliquePartition {
    size_t num_qubits = 0;
    size_t term_count = 0;
    std::vector<std::vector<PauliString>> cliques;
};

/// Greedy first-fit: terms visited by descending |coefficient| (1.0 for symbolic),
/// ties broken by canonical key order; each joins the first clique it commutes with
/// entirely, else opens a new one. Deterministic.
CliquePartition partition_commuting(const PauliOperator &h);

/// True iff the cliques are disjoint, cover exactly the operator's keys, and are
/// pairwise commuting internally.
bool verify_partition(const CliquePartition &p, const PauliOperator &h);

/// One clique per line, words separated by "; ".
void write_partition(std::ostream &out, const CliquePartition &p);

}  // namespace pauliarith

#endif
