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

#include "pauliarith/pauli_string.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace pauliarith {

namespace {

void check_same_size(const PauliString &p, const PauliString &q, const char *op) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(std::string(op) + ": qubit count mismatch (" + std::to_string(p.num_qubits()) +
                                    " vs " + std::to_string(q.num_qubits()) + ")");
    }
}

// Sites where the local product contributes +i: YZ, XY, ZX.
inline uint64_t plus_mask(uint64_t x, uint64_t y, uint64_t x2, uint64_t y2) {
    return (~x & x2 & y & y2) ^ (x & ~x2 & ~y & y2) ^ (x & x2 & y & ~y2);
}

// Sites where the local product contributes -i: YX, ZY, XZ.
inline uint64_t minus_mask(uint64_t x, uint64_t y, uint64_t x2, uint64_t y2) {
    return (~x & x2 & y & ~y2) ^ (x & ~x2 & y & y2) ^ (x & x2 & ~y & y2);
}

// |F+| - |F-| accumulated over all words.
int64_t phase_count(const PauliString &p, const PauliString &q) {
    auto px = p.x_words();
    auto py = p.y_words();
    auto qx = q.x_words();
    auto qy = q.y_words();
    int64_t plus = 0;
    int64_t minus = 0;
    for (size_t w = 0; w < px.size(); ++w) {
        plus += std::popcount(plus_mask(px[w], py[w], qx[w], qy[w]));
        minus += std::popcount(minus_mask(px[w], py[w], qx[w], qy[w]));
    }
    return plus - minus;
}

}  // namespace

std::complex<double> PhaseExponent::scalar() const {
    switch (value_) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

char pauli_to_char(Pauli p) {
    return "IXYZ"[static_cast<uint8_t>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
    }
    throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
}

PauliString::PauliString(size_t num_qubits) : num_qubits_(num_qubits), words_(2 * words_for(num_qubits), 0) {
}

PauliString PauliString::from_words(size_t num_qubits, std::span<const uint64_t> x_words,
                                    std::span<const uint64_t> y_words) {
    size_t n = words_for(num_qubits);
    if (x_words.size() != n || y_words.size() != n) {
        throw std::invalid_argument("from_words: expected " + std::to_string(n) + " words per bit vector");
    }
    PauliString result(num_qubits);
    std::copy(x_words.begin(), x_words.end(), result.x_data());
    std::copy(y_words.begin(), y_words.end(), result.y_data());
    if (num_qubits % 64 != 0) {
        uint64_t high = ~((uint64_t{1} << (num_qubits % 64)) - 1);
        if ((x_words[n - 1] & high) || (y_words[n - 1] & high)) {
            throw std::invalid_argument("from_words: bits set beyond num_qubits");
        }
    }
    return result;
}

Pauli PauliString::operator[](size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");
    }
    size_t w = qubit / 64;
    size_t b = qubit % 64;
    auto x = (x_words()[w] >> b) & 1;
    auto y = (y_words()[w] >> b) & 1;
    return static_cast<Pauli>(x | (y << 1));
}

bool PauliString::is_identity() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

PauliString PauliString::pad_to(size_t n) const {
    if (n < num_qubits_) {
        throw std::invalid_argument("pad_to: cannot shrink " + std::to_string(num_qubits_) + " qubits to " +
                                    std::to_string(n));
    }
    PauliString result(n);
    std::copy(x_words().begin(), x_words().end(), result.x_data());
    std::copy(y_words().begin(), y_words().end(), result.y_data());
    return result;
}

std::strong_ordering PauliString::operator<=>(const PauliString &other) const {
    if (auto c = num_qubits_ <=> other.num_qubits_; c != 0) {
        return c;
    }
    // words_ is x words then y words, so a single lexicographic pass is x-before-y.
    return std::lexicographical_compare_three_way(words_.begin(), words_.end(), other.words_.begin(),
                                                  other.words_.end());
}

size_t PauliString::hash() const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ num_qubits_;
    for (uint64_t w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h ^= h >> 31;
        h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<size_t>(h ^ (h >> 29));
}

std::string PauliString::dense_str() const {
    std::string out(num_qubits_, 'I');
    for (size_t q = 0; q < num_qubits_; ++q) {
        out[q] = pauli_to_char((*this)[q]);
    }
    return out;
}

PauliStringBuilder &PauliStringBuilder::set(size_t qubit, Pauli letter) {
    if (qubit >= result_.num_qubits()) {
        throw std::invalid_argument("qubit index " + std::to_string(qubit) + " out of range for " +
                                    std::to_string(result_.num_qubits()) + " qubits");
    }
    size_t w = qubit / 64;
    uint64_t bit = uint64_t{1} << (qubit % 64);
    auto code = static_cast<uint8_t>(letter);
    uint64_t *x = result_.x_data();
    uint64_t *y = result_.y_data();
    x[w] = (code & 1) ? (x[w] | bit) : (x[w] & ~bit);
    y[w] = (code & 2) ? (y[w] | bit) : (y[w] & ~bit);
    return *this;
}

PauliString encode(std::span<const QubitLetter> letters, size_t num_qubits) {
    PauliStringBuilder builder(num_qubits);
    std::vector<bool> seen(num_qubits, false);
    for (const auto &[qubit, letter] : letters) {
        if (qubit >= num_qubits) {
            throw std::invalid_argument("encode: qubit index " + std::to_string(qubit) + " out of range for " +
                                        std::to_string(num_qubits) + " qubits");
        }
        if (seen[qubit]) {
            throw std::invalid_argument("encode: duplicate qubit index " + std::to_string(qubit));
        }
        if (letter == Pauli::I) {
            throw std::invalid_argument("encode: letters must be X, Y or Z");
        }
        seen[qubit] = true;
        builder.set(qubit, letter);
    }
    return std::move(builder).build();
}

std::vector<QubitLetter> decode(const PauliString &p) {
    std::vector<QubitLetter> out;
    auto xs = p.x_words();
    auto ys = p.y_words();
    for (size_t w = 0; w < xs.size(); ++w) {
        uint64_t support = xs[w] | ys[w];
        while (support) {
            size_t b = std::countr_zero(support);
            support &= support - 1;
            auto code = ((xs[w] >> b) & 1) | (((ys[w] >> b) & 1) << 1);
            out.push_back({w * 64 + b, static_cast<Pauli>(code)});
        }
    }
    return out;
}

Product multiply(const PauliString &p, const PauliString &q) {
    check_same_size(p, q, "multiply");
    Product result{PhaseExponent(phase_count(p, q)), PauliString(p.num_qubits())};
    // XOR of the concatenated (x, y) word arrays; high bits stay zero.
    for (size_t w = 0; w < p.words_.size(); ++w) {
        result.string.words_[w] = p.words_[w] ^ q.words_[w];
    }
    return result;
}

PhaseMasks phase_masks(const PauliString &p, const PauliString &q) {
    check_same_size(p, q, "phase_masks");
    PhaseMasks masks{std::vector<uint64_t>(p.num_words()), std::vector<uint64_t>(p.num_words())};
    auto px = p.x_words();
    auto py = p.y_words();
    auto qx = q.x_words();
    auto qy = q.y_words();
    for (size_t w = 0; w < px.size(); ++w) {
        masks.plus[w] = plus_mask(px[w], py[w], qx[w], qy[w]);
        masks.minus[w] = minus_mask(px[w], py[w], qx[w], qy[w]);
    }
    return masks;
}

PhaseExponent product_phase(const PauliString &p, const PauliString &q) {
    check_same_size(p, q, "product_phase");
    return PhaseExponent(phase_count(p, q));
}

bool commutes(const PauliString &p, const PauliString &q) {
    check_same_size(p, q, "commutes");
    // tau = |F+| - |F-| has the parity of |F+ xor F-| since the masks are disjoint.
    auto px = p.x_words();
    auto py = p.y_words();
    auto qx = q.x_words();
    auto qy = q.y_words();
    uint64_t parity = 0;
    for (size_t w = 0; w < px.size(); ++w) {
        parity ^= plus_mask(px[w], py[w], qx[w], qy[w]) ^ minus_mask(px[w], py[w], qx[w], qy[w]);
    }
    return std::popcount(parity) % 2 == 0;
}

std::optional<StringCommutator> commutator(const PauliString &p, const PauliString &q) {
    check_same_size(p, q, "commutator");
    int64_t tau = phase_count(p, q);
    if (tau % 2 == 0) {
        return std::nullopt;
    }
    auto product = multiply(p, q);
    return StringCommutator{product.phase, std::move(product.string)};
}

size_t weight(const PauliString &p) {
    size_t total = 0;
    auto xs = p.x_words();
    auto ys = p.y_words();
    for (size_t w = 0; w < xs.size(); ++w) {
        total += std::popcount(xs[w] | ys[w]);
    }
    return total;
}

PauliString parse_word(std::string_view text, std::optional<size_t> num_qubits) {
    std::vector<QubitLetter> letters;
    size_t pos = 0;
    bool saw_identity = false;
    auto fail = [&](size_t at, const std::string &why) {
        throw std::invalid_argument("parse_word: " + why + " at position " + std::to_string(at) + " in \"" +
                                    std::string(text) + "\"");
    };
    while (pos < text.size()) {
        if (text[pos] == ' ') {
            ++pos;
            continue;
        }
        size_t start = pos;
        size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view token = text.substr(start, end - start);
        pos = end;
        if (token == "I") {
            saw_identity = true;
            continue;
        }
        char c = token[0];
        if (c != 'X' && c != 'Y' && c != 'Z') {
            fail(start, "expected X, Y or Z");
        }
        if (token.size() < 2) {
            fail(start, "missing qubit index");
        }
        size_t index = 0;
        auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            fail(start + 1, "malformed qubit index");
        }
        if (num_qubits && index >= *num_qubits) {
            fail(start + 1, "qubit index " + std::to_string(index) + " >= num_qubits " + std::to_string(*num_qubits));
        }
        letters.push_back({index, pauli_from_char(c)});
    }
    if (saw_identity && !letters.empty()) {
        fail(0, "'I' cannot be combined with other tokens");
    }
    size_t n = 0;
    if (num_qubits) {
        n = *num_qubits;
    } else {
        for (const auto &l : letters) {
            n = std::max(n, l.qubit + 1);
        }
    }
    std::vector<bool> seen(n, false);
    for (const auto &l : letters) {
        if (seen[l.qubit]) {
            fail(0, "duplicate qubit index " + std::to_string(l.qubit));
        }
        seen[l.qubit] = true;
    }
    return encode(letters, n);
}

std::string format_word(const PauliString &p) {
    auto letters = decode(p);
    if (letters.empty()) {
        return "I";
    }
    std::string out;
    for (const auto &[qubit, letter] : letters) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pauli_to_char(letter);
        out += std::to_string(qubit);
    }
    return out;
}

}  // namespace pauliarith
