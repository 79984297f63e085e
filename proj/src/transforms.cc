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

#include "pauliarith/transforms.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace pauliarith {

namespace {

constexpr double kCliffordTol = 1e-9;

void check_gate(const PauliOperator &h, const Gate &g, const char *op) {
    if (g.generator.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument(std::string(op) + ": gate acts on " + std::to_string(g.generator.num_qubits()) +
                                    " qubits, operator on " + std::to_string(h.num_qubits()));
    }
}

double real_angle(const Coefficient &angle, const char *op) {
    Complex v = angle.numeric();
    if (v.imag() != 0) {
        throw std::invalid_argument(std::string(op) + ": rotation angle must be real");
    }
    return v.real();
}

void accumulate(PauliOperator::TermMap &into, const PauliString &key, const Coefficient &value) {
    auto [it, inserted] = into.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
    }
}

}  // namespace

Circuit::Circuit(size_t num_qubits, std::vector<Gate> gates) : num_qubits_(num_qubits) {
    for (auto &g : gates) {
        append(std::move(g));
    }
}

void Circuit::append(Gate g) {
    if (g.generator.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Circuit::append: gate acts on " + std::to_string(g.generator.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(num_qubits_));
    }
    gates_.push_back(std::move(g));
}

PauliOperator rotate_conjugate(const PauliOperator &h, const Gate &g) {
    check_gate(h, g, "rotate_conjugate");
    Coefficient cos_theta;
    Coefficient sin_theta;
    if (g.angle.is_numeric()) {
        double theta = real_angle(g.angle, "rotate_conjugate");
        cos_theta = std::cos(theta);
        sin_theta = std::sin(theta);
    } else {
        cos_theta = Coefficient(Expr::cos(g.angle.expr()));
        sin_theta = Coefficient(Expr::sin(g.angle.expr()));
    }
    PauliOperator::TermMap terms;
    terms.reserve(2 * h.size());
    for (const auto &[q, c] : h.sorted_terms()) {
        if (commutes(g.generator, q)) {
            accumulate(terms, q, c);
            continue;
        }
        auto product = multiply(g.generator, q);
        accumulate(terms, q, cos_theta * c);
        // i * i^e = i^(e+1)
        Coefficient phase((product.phase + PhaseExponent(1)).scalar());
        accumulate(terms, product.string, phase * sin_theta * c);
    }
    return PauliOperator(h.num_qubits(), std::move(terms));
}

FoldResult fold_circuit(const PauliOperator &h, const Circuit &c, size_t split_at) {
    if (split_at > c.size()) {
        throw std::out_of_range("fold_circuit: split_at " + std::to_string(split_at) + " exceeds circuit length " +
                                std::to_string(c.size()));
    }
    if (c.num_qubits() != h.num_qubits()) {
        throw std::invalid_argument("fold_circuit: qubit count mismatch");
    }
    PauliOperator folded = h;
    for (size_t k = c.size(); k > split_at; --k) {
        folded = rotate_conjugate(folded, c.gates()[k - 1]);
    }
    std::vector<Gate> prefix(c.gates().begin(), c.gates().begin() + static_cast<std::ptrdiff_t>(split_at));
    return {std::move(folded), Circuit(c.num_qubits(), std::move(prefix))};
}

PauliOperator clifford_fold(const PauliOperator &h, const Gate &g) {
    check_gate(h, g, "clifford_fold");
    if (g.angle.is_symbolic()) {
        throw std::invalid_argument("clifford_fold: angle must be numeric");
    }
    double theta = real_angle(g.angle, "clifford_fold");
    double quarter_turns = theta / (std::numbers::pi / 2);
    double k = std::round(quarter_turns);
    if (std::abs(theta - k * (std::numbers::pi / 2)) > kCliffordTol) {
        throw std::invalid_argument("clifford_fold: angle " + format_double(theta) + " is not a multiple of pi/2");
    }
    auto turn = static_cast<int>(((static_cast<int64_t>(k) % 4) + 4) % 4);
    static constexpr double kCos[] = {1, 0, -1, 0};
    static constexpr double kSin[] = {0, 1, 0, -1};
    PauliOperator::TermMap terms;
    terms.reserve(h.size());
    for (const auto &[q, c] : h.terms()) {
        if (commutes(g.generator, q)) {
            terms.emplace(q, c);
        } else if (turn % 2 == 0) {
            terms.emplace(q, mul(kCos[turn], c));
        } else {
            auto product = multiply(g.generator, q);
            Coefficient phase((product.phase + PhaseExponent(1)).scalar() * kSin[turn]);
            terms.emplace(std::move(product.string), mul(phase, c));
        }
    }
    return PauliOperator(h.num_qubits(), std::move(terms));
}

PauliOperator controlled_generator(const PauliOperator &g, size_t control) {
    if (control >= g.num_qubits()) {
        throw std::invalid_argument("controlled_generator: control qubit " + std::to_string(control) +
                                    " out of range for " + std::to_string(g.num_qubits()) + " qubits");
    }
    PauliOperator::TermMap terms;
    terms.reserve(2 * g.size());
    for (const auto &[p, c] : g.terms()) {
        if (p[control] != Pauli::I) {
            throw std::invalid_argument("controlled_generator: term " + format_word(p) + " acts on control qubit " +
                                        std::to_string(control));
        }
        // Z_control and p have disjoint support, so the product carries no phase.
        PauliString zp = PauliStringBuilder(p).set(control, Pauli::Z).build();
        terms.emplace(p, mul(0.5, c));
        terms.emplace(std::move(zp), mul(-0.5, c));
    }
    return PauliOperator(g.num_qubits(), std::move(terms));
}

PauliOperator gradient_operator(const PauliOperator &h, const PauliOperator &g) {
    return scalar_mul(0.25, op_commutator(h, g));
}

Coefficient zero_state_expectation(const PauliOperator &h) {
    Coefficient total;
    for (const auto &[p, c] : h.sorted_terms()) {
        auto x = p.x_words();
        auto y = p.y_words();
        if (std::equal(x.begin(), x.end(), y.begin())) {
            total += c;
        }
    }
    return total;
}

void write_circuit(std::ostream &out, const Circuit &c) {
    out << "circuit v1 qubits=" << c.num_qubits() << '\n';
    for (const auto &g : c.gates()) {
        out << "rot ; " << format_word(g.generator) << " ; " << to_string(g.angle) << '\n';
    }
}

Circuit read_circuit(std::istream &in) {
    std::string line;
    static constexpr std::string_view prefix = "circuit v1 qubits=";
    if (!std::getline(in, line) || !line.starts_with(prefix)) {
        throw std::invalid_argument("read_circuit: bad or missing header");
    }
    size_t num_qubits = 0;
    try {
        size_t used = 0;
        num_qubits = std::stoul(line.substr(prefix.size()), &used);
        if (prefix.size() + used != line.size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception &) {
        throw std::invalid_argument("read_circuit: bad qubit count in \"" + line + "\"");
    }
    Circuit circuit(num_qubits);
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto first = line.find(';');
        auto second = first == std::string::npos ? std::string::npos : line.find(';', first + 1);
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') {
                s.remove_prefix(1);
            }
            while (!s.empty() && s.back() == ' ') {
                s.remove_suffix(1);
            }
            return s;
        };
        std::string_view view(line);
        if (second == std::string::npos || trim(view.substr(0, first)) != "rot") {
            throw std::invalid_argument("read_circuit: line " + std::to_string(line_no) +
                                        " is not 'rot ; <word> ; <coeff>'");
        }
        auto word = trim(view.substr(first + 1, second - first - 1));
        circuit.append(Gate{parse_word(word, num_qubits), parse_coefficient(view.substr(second + 1))});
    }
    return circuit;
}

}  // namespace pauliarith
