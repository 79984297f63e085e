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

#include "pauliarith/dla.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace pauliarith {

std::optional<size_t> DlaBasis::index_of(const PauliString &p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

size_t DlaBasis::insert(const PauliString &p) {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument("DlaBasis::insert: qubit count mismatch");
    }
    if (p.is_identity()) {
        throw std::invalid_argument("DlaBasis::insert: the identity is not a basis element");
    }
    auto [it, inserted] = index_.try_emplace(p, elements_.size());
    if (inserted) {
        elements_.push_back(p);
    }
    return it->second;
}

DlaBasis lie_closure(const std::vector<PauliString> &generators) {
    if (generators.empty()) {
        throw std::invalid_argument("lie_closure: no generators");
    }
    size_t n = generators[0].num_qubits();
    DlaBasis basis(n);
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("lie_closure: generators have mixed qubit counts");
        }
        if (g.is_identity()) {
            throw std::invalid_argument("lie_closure: identity generator has a zero commutator with everything");
        }
        basis.insert(g);
    }
    // Each element is commuted against every earlier one exactly once; new strings
    // are appended and picked up by the outer loop.
    for (size_t k = 0; k < basis.dimension(); ++k) {
        for (size_t j = 0; j < k; ++j) {
            auto comm = commutator(basis.elements()[j], basis.elements()[k]);
            if (comm) {
                basis.insert(comm->string);
            }
        }
    }
    return basis;
}

DlaBasis lie_closure(const std::vector<PauliOperator> &generators) {
    std::vector<PauliString> strings;
    strings.reserve(generators.size());
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].size() != 1) {
            throw std::invalid_argument("lie_closure: generator " + std::to_string(i) + " has " +
                                        std::to_string(generators[i].size()) +
                                        " terms; only single Pauli-string generators are supported");
        }
        strings.push_back(generators[i].terms().begin()->first);
    }
    return lie_closure(strings);
}

std::vector<StructureConstant> structure_constants(const DlaBasis &basis) {
    const auto &elements = basis.elements();
    std::vector<std::vector<StructureConstant>> rows(elements.size());
    for (size_t a = 0; a < elements.size(); ++a) {
        for (size_t b = a + 1; b < elements.size(); ++b) {
            auto comm = commutator(elements[a], elements[b]);
            if (!comm) {
                continue;
            }
            auto gamma = basis.index_of(comm->string);
            if (!gamma) {
                throw std::invalid_argument("structure_constants: basis is not closed; [" + format_word(elements[a]) +
                                            ", " + format_word(elements[b]) + "] gives " +
                                            format_word(comm->string));
            }
            Complex f = comm->coefficient();
            rows[a].push_back({a, b, *gamma, f});
            rows[b].push_back({b, a, *gamma, -f});
        }
    }
    std::vector<StructureConstant> out;
    for (auto &row : rows) {
        // Row a receives (a, b) for b > a in order, then (a, b') for b' < a in order.
        std::stable_sort(row.begin(), row.end(), [](const auto &x, const auto &y) { return x.beta < y.beta; });
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<PauliString> build_so2n_generators(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("build_so2n_generators: need n >= 2, got " + std::to_string(n));
    }
    std::vector<PauliString> out;
    for (size_t i = 0; i + 1 < n; ++i) {
        out.push_back(PauliStringBuilder(n).set(i, Pauli::X).set(i + 1, Pauli::X).build());
    }
    for (size_t i = 0; i < n; ++i) {
        out.push_back(PauliStringBuilder(n).set(i, Pauli::Z).build());
    }
    return out;
}

void write_structure_constants_csv(std::ostream &out, const std::vector<StructureConstant> &constants) {
    out << "alpha,beta,gamma,re,im\n";
    for (const auto &f : constants) {
        out << f.alpha << ',' << f.beta << ',' << f.gamma << ',' << format_double(f.value.real()) << ','
            << format_double(f.value.imag()) << '\n';
    }
}

void write_basis(std::ostream &out, const DlaBasis &basis) {
    for (const auto &p : basis.elements()) {
        out << format_word(p) << '\n';
    }
}

}  // namespace pauliarith
