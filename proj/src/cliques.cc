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

#include "pauliarith/cliques.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <unordered_set>

namespace pauliarith {

CliquePartition partition_commuting(const PauliOperator &h) {
    struct Entry {
        double magnitude;
        PauliString string;
    };
    std::vector<Entry> order;
    order.reserve(h.size());
    for (const auto &[p, c] : h.terms()) {
        order.push_back({c.is_numeric() ? std::abs(c.numeric()) : 1.0, p});
    }
    std::sort(order.begin(), order.end(), [](const Entry &a, const Entry &b) {
        if (a.magnitude != b.magnitude) {
            return a.magnitude > b.magnitude;
        }
        return a.string < b.string;
    });

    CliquePartition out{h.num_qubits(), h.size(), {}};
    for (auto &entry : order) {
        auto fits = [&](const std::vector<PauliString> &clique) {
            return std::all_of(clique.begin(), clique.end(),
                               [&](const PauliString &member) { return commutes(member, entry.string); });
        };
        auto it = std::find_if(out.cliques.begin(), out.cliques.end(), fits);
        if (it == out.cliques.end()) {
            out.cliques.push_back({std::move(entry.string)});
        } else {
            it->push_back(std::move(entry.string));
        }
    }
    return out;
}

bool verify_partition(const CliquePartition &p, const PauliOperator &h) {
    if (p.num_qubits != h.num_qubits()) {
        return false;
    }
    std::unordered_set<PauliString, PauliStringHash> seen;
    for (const auto &clique : p.cliques) {
        if (clique.empty()) {
            return false;
        }
        for (size_t i = 0; i < clique.size(); ++i) {
            if (clique[i].num_qubits() != h.num_qubits() || !h.terms().contains(clique[i]) ||
                !seen.insert(clique[i]).second) {
                return false;
            }
            for (size_t j = 0; j < i; ++j) {
                if (!commutes(clique[i], clique[j])) {
                    return false;
                }
            }
        }
    }
    return seen.size() == h.size();
}

void write_partition(std::ostream &out, const CliquePartition &p) {
    for (const auto &clique : p.cliques) {
        for (size_t i = 0; i < clique.size(); ++i) {
            out << (i ? "; " : "") << format_word(clique[i]);
        }
        out << '\n';
    }
}

}  // namespace pauliarith
