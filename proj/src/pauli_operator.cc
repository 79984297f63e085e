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

#include "pauliarith/pauli_operator.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pauliarith {

namespace {

void check_same_size(const PauliOperator &a, const PauliOperator &b, const char *op) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(std::string(op) + ": qubit count mismatch (" + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()) + ")");
    }
}

void drop_zeros(PauliOperator::TermMap &terms, double tol) {
    absl::erase_if(terms, [tol](const auto &kv) { return is_zero(kv.second, tol); });
}

std::vector<const PauliOperator::TermMap::value_type *> term_pointers(const PauliOperator &op) {
    std::vector<const PauliOperator::TermMap::value_type *> out;
    out.reserve(op.size());
    for (const auto &kv : op.terms()) {
        out.push_back(&kv);
    }
    return out;
}

// i^e * v by component rotation (exact).
Complex rotate_phase(PhaseExponent phase, Complex v) {
    switch (phase.value()) {
        case 0:
            return v;
        case 1:
            return {-v.imag(), v.real()};
        case 2:
            return -v;
        default:
            return {v.imag(), -v.real()};
    }
}

Coefficient phased_product(PhaseExponent phase, const Coefficient &a, const Coefficient &b) {
    if (a.is_numeric() && b.is_numeric()) {
        Complex x = a.numeric();
        Complex y = b.numeric();
        Complex xy{x.real() * y.real() - x.imag() * y.imag(), x.real() * y.imag() + x.imag() * y.real()};
        return Coefficient(rotate_phase(phase, xy));
    }
    return mul(Coefficient(phase.scalar()), mul(a, b));
}

void accumulate(PauliOperator::TermMap &into, PauliString key, Coefficient value) {
    auto [it, inserted] = into.try_emplace(std::move(key), value);
    if (!inserted) {
        it->second += value;
    }
}

// Total order on operators used to fix the argument order of op_commutator.
std::strong_ordering compare_operators(const PauliOperator &a, const PauliOperator &b) {
    auto ta = a.sorted_terms();
    auto tb = b.sorted_terms();
    auto key_cmp = std::lexicographical_compare_three_way(
        ta.begin(), ta.end(), tb.begin(), tb.end(), [](const auto &x, const auto &y) { return x.first <=> y.first; });
    if (key_cmp != 0) {
        return key_cmp;
    }
    for (size_t i = 0; i < ta.size(); ++i) {
        auto sa = to_string(ta[i].second);
        auto sb = to_string(tb[i].second);
        if (auto c = sa <=> sb; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace

PauliOperator::PauliOperator(size_t num_qubits, std::vector<Term> terms, double prune_tol) : num_qubits_(num_qubits) {
    terms_.reserve(terms.size());
    for (auto &[string, c] : terms) {
        if (string.num_qubits() != num_qubits) {
            throw std::invalid_argument("term has " + std::to_string(string.num_qubits()) +
                                        " qubits, operator has " + std::to_string(num_qubits));
        }
        accumulate(terms_, std::move(string), std::move(c));
    }
    drop_zeros(terms_, prune_tol);
}

PauliOperator::PauliOperator(size_t num_qubits, TermMap terms, double prune_tol)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
    for (const auto &kv : terms_) {
        if (kv.first.num_qubits() != num_qubits) {
            throw std::invalid_argument("term has " + std::to_string(kv.first.num_qubits()) +
                                        " qubits, operator has " + std::to_string(num_qubits));
        }
    }
    drop_zeros(terms_, prune_tol);
}

PauliOperator PauliOperator::term(PauliString string, Coefficient coefficient) {
    size_t n = string.num_qubits();
    std::vector<Term> terms;
    terms.emplace_back(std::move(string), std::move(coefficient));
    return PauliOperator(n, std::move(terms));
}

PauliOperator PauliOperator::term(std::string_view word, size_t num_qubits, Coefficient coefficient) {
    return term(parse_word(word, num_qubits), std::move(coefficient));
}

std::vector<PauliOperator::Term> PauliOperator::sorted_terms() const {
    std::vector<Term> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const Term &x, const Term &y) { return x.first < y.first; });
    return out;
}

Coefficient PauliOperator::coefficient(const PauliString &string) const {
    auto it = terms_.find(string);
    return it == terms_.end() ? Coefficient(0.0) : it->second;
}

bool PauliOperator::is_numeric() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &kv) { return kv.second.is_numeric(); });
}

void PauliOperator::add_term(const PauliString &string, const Coefficient &c, double prune_tol) {
    if (string.num_qubits() != num_qubits_) {
        throw std::invalid_argument("add_term: qubit count mismatch");
    }
    auto [it, inserted] = terms_.try_emplace(string, c);
    if (!inserted) {
        it->second += c;
    }
    if (is_zero(it->second, prune_tol)) {
        terms_.erase(it);
    }
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return num_qubits_ == other.num_qubits_ && terms_ == other.terms_;
}

PauliOperator op_add(const PauliOperator &a, const PauliOperator &b) {
    check_same_size(a, b, "op_add");
    PauliOperator::TermMap terms = a.terms();
    for (const auto &[string, c] : b.terms()) {
        accumulate(terms, string, c);
    }
    return PauliOperator(a.num_qubits(), std::move(terms));
}

PauliOperator scalar_mul(const Coefficient &s, const PauliOperator &a) {
    if (is_zero(s, 0.0)) {
        return PauliOperator(a.num_qubits());
    }
    PauliOperator::TermMap terms;
    terms.reserve(a.size());
    for (const auto &[string, c] : a.terms()) {
        terms.emplace(string, mul(s, c));
    }
    return PauliOperator(a.num_qubits(), std::move(terms));
}

namespace {

// Upper bound on distinct products: |a||b|, and 4^N for small N.
size_t product_estimate(const PauliOperator &a, const PauliOperator &b) {
    size_t estimate = a.size() * b.size();
    if (a.num_qubits() < 16) {
        estimate = std::min(estimate, size_t{1} << (2 * a.num_qubits()));
    }
    return std::min<size_t>(estimate, size_t{1} << 24);
}

unsigned worker_count(unsigned requested, size_t rows) {
    return std::max(1u, std::min<unsigned>(requested, static_cast<unsigned>(rows)));
}

}  // namespace

PauliOperator op_mul(const PauliOperator &a, const PauliOperator &b, MulOptions options) {
    check_same_size(a, b, "op_mul");
    auto lhs = term_pointers(a);
    auto rhs = term_pointers(b);
    size_t estimate = product_estimate(a, b);

    // Products of one row are formed first so each insert can be preceded by a
    // prefetch of a slot a few entries ahead; once the map outgrows the cache
    // this hides most of the miss latency.
    constexpr size_t kPrefetchDistance = 8;
    auto run = [&](size_t begin, size_t end, PauliOperator::TermMap &out) {
        std::vector<PauliOperator::Term> row;
        row.reserve(rhs.size());
        for (size_t i = begin; i < end; ++i) {
            const auto &[p, cp] = *lhs[i];
            row.clear();
            for (const auto *rt : rhs) {
                const auto &[q, cq] = *rt;
                auto product = multiply(p, q);
                row.emplace_back(std::move(product.string), phased_product(product.phase, cp, cq));
            }
            for (size_t j = 0; j < row.size(); ++j) {
                if (j + kPrefetchDistance < row.size()) {
                    out.prefetch(row[j + kPrefetchDistance].first);
                }
                accumulate(out, std::move(row[j].first), std::move(row[j].second));
            }
        }
    };

    unsigned threads = worker_count(options.threads, lhs.size());
    PauliOperator::TermMap result;
    if (threads <= 1) {
        result.reserve(estimate);
        run(0, lhs.size(), result);
        if (options.peak_terms) {
            *options.peak_terms = result.size();
        }
    } else {
        std::vector<PauliOperator::TermMap> partial(threads);
        std::vector<std::thread> workers;
        size_t chunk = (lhs.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            size_t begin = std::min(lhs.size(), t * chunk);
            size_t end = std::min(lhs.size(), begin + chunk);
            workers.emplace_back([&, t, begin, end] {
                partial[t].reserve(std::min(estimate, (end - begin) * rhs.size()));
                run(begin, end, partial[t]);
            });
        }
        for (auto &w : workers) {
            w.join();
        }
        size_t peak = 0;
        for (const auto &m : partial) {
            peak += m.size();
        }
        // Merge in thread order so the result does not depend on scheduling.
        result = std::move(partial[0]);
        for (unsigned t = 1; t < threads; ++t) {
            for (auto &kv : partial[t]) {
                accumulate(result, kv.first, kv.second);
            }
        }
        if (options.peak_terms) {
            *options.peak_terms = peak;
        }
    }
    return PauliOperator(a.num_qubits(), std::move(result), options.prune_tol);
}

PauliOperator dagger(const PauliOperator &a) {
    PauliOperator::TermMap terms;
    terms.reserve(a.size());
    for (const auto &[string, c] : a.terms()) {
        terms.emplace(string, conjugate(c));
    }
    return PauliOperator(a.num_qubits(), std::move(terms));
}

PauliOperator op_commutator(const PauliOperator &a, const PauliOperator &b) {
    check_same_size(a, b, "op_commutator");
    // Always accumulate in one argument order so [b, a] is the exact negation of [a, b].
    if (compare_operators(a, b) > 0) {
        return scalar_mul(-1.0, op_commutator(b, a));
    }
    auto lhs = a.sorted_terms();
    auto rhs = b.sorted_terms();
    PauliOperator::TermMap terms;
    for (const auto &[p, cp] : lhs) {
        for (const auto &[q, cq] : rhs) {
            auto comm = commutator(p, q);
            if (!comm) {
                continue;
            }
            // 2 i^e folded as the phase of e plus the factor 2.
            accumulate(terms, std::move(comm->string), mul(2.0, phased_product(comm->phase, cp, cq)));
        }
    }
    return PauliOperator(a.num_qubits(), std::move(terms));
}

bool is_hermitian(const PauliOperator &a, double tol) {
    for (const auto &[string, c] : a.terms()) {
        if (c.is_symbolic()) {
            throw std::invalid_argument("is_hermitian: operator has symbolic coefficients");
        }
        if (std::abs(c.numeric().imag()) > tol) {
            return false;
        }
    }
    return true;
}

bool is_anti_hermitian(const PauliOperator &a, double tol) {
    for (const auto &[string, c] : a.terms()) {
        if (c.is_symbolic()) {
            throw std::invalid_argument("is_anti_hermitian: operator has symbolic coefficients");
        }
        if (std::abs(c.numeric().real()) > tol) {
            return false;
        }
    }
    return true;
}

PauliOperator prune(const PauliOperator &a, double tol) {
    return PauliOperator(a.num_qubits(), a.terms(), tol);
}

PauliOperator substitute_all(const PauliOperator &a, const Bindings &bindings) {
    PauliOperator::TermMap terms;
    terms.reserve(a.size());
    for (const auto &[string, c] : a.terms()) {
        terms.emplace(string, substitute(c, bindings));
    }
    return PauliOperator(a.num_qubits(), std::move(terms));
}

PauliOperator differentiate_all(const PauliOperator &a, std::string_view param) {
    PauliOperator::TermMap terms;
    terms.reserve(a.size());
    for (const auto &[string, c] : a.terms()) {
        terms.emplace(string, differentiate(c, param));
    }
    return PauliOperator(a.num_qubits(), std::move(terms));
}

double max_coefficient_distance(const PauliOperator &a, const PauliOperator &b) {
    check_same_size(a, b, "max_coefficient_distance");
    double worst = 0;
    for (const auto &[string, c] : a.terms()) {
        worst = std::max(worst, std::abs(c.numeric() - b.coefficient(string).numeric()));
    }
    for (const auto &[string, c] : b.terms()) {
        if (!a.terms().contains(string)) {
            worst = std::max(worst, std::abs(c.numeric()));
        }
    }
    return worst;
}

void write_operator(std::ostream &out, const PauliOperator &op) {
    out << "pauli-op v1 qubits=" << op.num_qubits() << '\n';
    for (const auto &[string, c] : op.sorted_terms()) {
        out << to_string(c) << " ; " << format_word(string) << '\n';
    }
}

PauliOperator read_operator(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("read_operator: missing header");
    }
    static constexpr std::string_view prefix = "pauli-op v1 qubits=";
    if (!line.starts_with(prefix)) {
        throw std::invalid_argument("read_operator: bad header \"" + line + "\"");
    }
    size_t num_qubits = 0;
    try {
        size_t used = 0;
        num_qubits = std::stoul(line.substr(prefix.size()), &used);
        if (prefix.size() + used != line.size()) {
            throw std::invalid_argument("trailing characters");
        }
    } catch (const std::exception &) {
        throw std::invalid_argument("read_operator: bad qubit count in \"" + line + "\"");
    }
    std::vector<PauliOperator::Term> terms;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto sep = line.rfind(';');
        if (sep == std::string::npos) {
            throw std::invalid_argument("read_operator: line " + std::to_string(line_no) + " has no ';'");
        }
        std::string_view word(line);
        word.remove_prefix(sep + 1);
        while (!word.empty() && word.front() == ' ') {
            word.remove_prefix(1);
        }
        terms.emplace_back(parse_word(word, num_qubits), parse_coefficient(std::string_view(line).substr(0, sep)));
    }
    return PauliOperator(num_qubits, std::move(terms));
}

std::string to_text(const PauliOperator &op) {
    std::ostringstream out;
    write_operator(out, op);
    return out.str();
}

PauliOperator from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_operator(in);
}

}  // namespace pauliarith
