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

#ifndef PAULIARITH_PAULI_STRING_H
#define PAULIARITH_PAULI_STRING_H

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pauliarith {

/// A global scalar i^e with e reduced into {0, 1, 2, 3}.
class PhaseExponent {
   public:
    constexpr PhaseExponent() = default;
    /// Euclidean reduction: any integer (including negatives) lands in {0,1,2,3}.
    constexpr explicit PhaseExponent(int64_t e) : value_(static_cast<uint8_t>(((e % 4) + 4) % 4)) {
    }

    constexpr uint8_t value() const {
        return value_;
    }
    std::complex<double> scalar() const;

    constexpr PhaseExponent operator+(PhaseExponent other) const {
        return PhaseExponent(int64_t{value_} + int64_t{other.value_});
    }
    constexpr bool operator==(const PhaseExponent &) const = default;

   private:
    uint8_t value_ = 0;
};

/// Single-qubit Pauli letter. The numeric values are the (x, y) bit codes:
/// bit 0 is the x bit, bit 1 is the y bit.
enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_to_char(Pauli p);
Pauli pauli_from_char(char c);

struct Product;

/// An N-qubit Pauli word in binary symplectic form.
///
/// Qubit i is stored at bit (i mod 64) of word (i div 64). The per-qubit code is
/// I=(0,0), X=(1,0), Y=(0,1), Z=(1,1) for (x_i, y_i): x_i marks X or Z, y_i marks
/// Y or Z. Bits at positions >= num_qubits are always zero, so the word pair is a
/// canonical key usable for hashing and ordering.
///
/// Values are immutable after construction.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);

    /// Builds a string from raw word vectors. Throws std::invalid_argument if the
    /// word counts are wrong or any bit beyond num_qubits is set.
    static PauliString from_words(size_t num_qubits, std::span<const uint64_t> x_words,
                                  std::span<const uint64_t> y_words);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t num_words() const {
        return words_.size() / 2;
    }
    std::span<const uint64_t> x_words() const {
        return {words_.data(), num_words()};
    }
    std::span<const uint64_t> y_words() const {
        return {words_.data() + num_words(), num_words()};
    }

    Pauli operator[](size_t qubit) const;
    bool is_identity() const;

    /// Extends with identity on qubits [num_qubits, n). Throws if n < num_qubits.
    PauliString pad_to(size_t n) const;

    /// Canonical key order: num_qubits, then x words lexicographically, then y words.
    std::strong_ordering operator<=>(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;

    size_t hash() const;

    /// Debug form, one letter per qubit with qubit 0 leftmost (e.g. "XIZY").
    std::string dense_str() const;

   private:
    friend class PauliStringBuilder;
    friend Product multiply(const PauliString &p, const PauliString &q);

    static size_t words_for(size_t num_qubits) {
        return (num_qubits + 63) / 64;
    }
    uint64_t *x_data() {
        return words_.data();
    }
    uint64_t *y_data() {
        return words_.data() + num_words();
    }

    size_t num_qubits_ = 0;
    // x words followed by y words.
    std::vector<uint64_t> words_;
};

struct PauliStringHash {
    size_t operator()(const PauliString &p) const {
        return p.hash();
    }
};

/// Mutable staging area for assembling a PauliString letter by letter.
class PauliStringBuilder {
   public:
    explicit PauliStringBuilder(size_t num_qubits) : result_(num_qubits) {
    }
    explicit PauliStringBuilder(PauliString start) : result_(std::move(start)) {
    }
    PauliStringBuilder &set(size_t qubit, Pauli letter);
    PauliString build() && {
        return std::move(result_);
    }
    PauliString build() const & {
        return result_;
    }

   private:
    PauliString result_;
};

struct QubitLetter {
    size_t qubit;
    Pauli letter;
    bool operator==(const QubitLetter &) const = default;
};

/// Encodes a sparse letter list. Throws std::invalid_argument on an index out of
/// range, a duplicate index, or a letter other than X/Y/Z.
PauliString encode(std::span<const QubitLetter> letters, size_t num_qubits);
/// Non-identity sites in ascending qubit order.
std::vector<QubitLetter> decode(const PauliString &p);

/// Result of multiplying two strings: M(p) M(q) = i^phase M(string).
struct Product {
    PhaseExponent phase;
    PauliString string;
};

struct PhaseMasks {
    std::vector<uint64_t> plus;
    std::vector<uint64_t> minus;
};

/// XOR product with the popcount phase rule. Throws std::invalid_argument on a
/// qubit-count mismatch.
Product multiply(const PauliString &p, const PauliString &q);

/// Per-qubit masks of sites whose local product contributes +i (plus) or -i (minus).
PhaseMasks phase_masks(const PauliString &p, const PauliString &q);

/// Phase exponent of p*q without materializing the product string.
PhaseExponent product_phase(const PauliString &p, const PauliString &q);

bool commutes(const PauliString &p, const PauliString &q);

/// [p, q] = coefficient * string when the strings anticommute.
struct StringCommutator {
    PhaseExponent phase;  // phase of p*q; the commutator is 2 i^phase
    PauliString string;
    std::complex<double> coefficient() const {
        return 2.0 * phase.scalar();
    }
};

/// Absent iff p and q commute.
std::optional<StringCommutator> commutator(const PauliString &p, const PauliString &q);

/// Number of non-identity sites.
size_t weight(const PauliString &p);

/// Parses "I", "" or space-separated `<letter><index>` tokens such as "X0 Y3".
/// When num_qubits is not given it is inferred as max index + 1 (0 for identity).
/// Throws std::invalid_argument with the character position of the offending token.
PauliString parse_word(std::string_view text, std::optional<size_t> num_qubits = std::nullopt);
/// Inverse of parse_word: tokens in ascending qubit order, "I" for the identity.
std::string format_word(const PauliString &p);

}  // namespace pauliarith

template <>
struct std::hash<pauliarith::PauliString> {
    size_t operator()(const pauliarith::PauliString &p) const {
        return p.hash();
    }
};

#endif
