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

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "pauliarith/dense_oracle.h"
#include "test_util.h"

using namespace pauliarith;
using pauliarith::testing::random_operator;
using pauliarith::testing::random_string;

namespace {

constexpr double kPi = std::numbers::pi;

PauliOperator op(size_t n, std::initializer_list<std::pair<const char *, Coefficient>> terms) {
    std::vector<PauliOperator::Term> out;
    for (const auto &[word, c] : terms) {
        out.emplace_back(parse_word(word, n), c);
    }
    return PauliOperator(n, std::move(out));
}

Gate gate(const char *word, size_t n, Coefficient angle) {
    return Gate{parse_word(word, n), std::move(angle)};
}

PauliString random_non_identity(size_t n, std::mt19937_64 &rng) {
    while (true) {
        auto p = random_string(n, rng);
        if (!p.is_identity()) {
            return p;
        }
    }
}

std::vector<Complex> random_state(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> psi(size_t{1} << n);
    double norm = 0;
    for (auto &v : psi) {
        v = {g(rng), g(rng)};
        norm += std::norm(v);
    }
    for (auto &v : psi) {
        v /= std::sqrt(norm);
    }
    return psi;
}

}  // namespace

TEST(transforms, rotate_conjugate_examples) {
    auto rotated = rotate_conjugate(op(1, {{"Z0", 1.0}}), gate("X0", 1, 0.3));
    EXPECT_LE(max_coefficient_distance(rotated, op(1, {{"Z0", std::cos(0.3)}, {"Y0", std::sin(0.3)}})), 1e-15);
    EXPECT_EQ(rotate_conjugate(op(1, {{"X0", 1.0}}), gate("X0", 1, 1.234)), op(1, {{"X0", 1.0}}));
    EXPECT_EQ(rotate_conjugate(op(1, {{"Z0", 1.0}}), gate("X0", 1, 0.0)), op(1, {{"Z0", 1.0}}));
    EXPECT_THROW(rotate_conjugate(op(1, {{"Z0", 1.0}}), gate("X0", 2, 0.3)), std::invalid_argument);
    EXPECT_THROW(rotate_conjugate(op(1, {{"Z0", 1.0}}), gate("X0", 1, Complex(0.3, 0.1))), std::invalid_argument);
}

TEST(transforms, rotate_conjugate_matches_dense_conjugation) {
    std::mt19937_64 rng(31);
    const double grid[] = {0.0, kPi / 2, -kPi / 2, kPi, 0.3, -1.1, 2.5};
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 1 + rng() % 5;
        auto h = random_operator(n, 16, rng);
        auto p = random_non_identity(n, rng);
        for (double theta : grid) {
            Gate g{p, theta};
            auto u = rotation_matrix(g);
            auto expected = u.adjoint() * op_to_matrix(h) * u;
            auto got = rotate_conjugate(h, g);
            ASSERT_LE(max_abs_diff(op_to_matrix(got), expected), 1e-12);
            ASSERT_LE(got.size(), 2 * h.size());
        }
    }
}

TEST(transforms, symbolic_rotation_substitutes_to_numeric) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 1 + rng() % 5;
        auto h = random_operator(n, 16, rng);
        auto p = random_non_identity(n, rng);
        double v = angle(rng);
        auto symbolic = rotate_conjugate(h, Gate{p, Coefficient::parameter("t")});
        auto numeric = rotate_conjugate(h, Gate{p, v});
        EXPECT_LE(max_coefficient_distance(substitute_all(symbolic, {{"t", v}}), numeric), 1e-12);
    }
}

TEST(transforms, fold_circuit_examples) {
    Circuit c(1, {gate("X0", 1, 0.3)});
    auto h = op(1, {{"Z0", 1.0}});
    auto whole = fold_circuit(h, c, 1);
    EXPECT_EQ(whole.folded, h);
    EXPECT_EQ(whole.remainder.size(), 1u);

    auto folded = fold_circuit(h, c, 0);
    EXPECT_LE(max_coefficient_distance(folded.folded, op(1, {{"Z0", std::cos(0.3)}, {"Y0", std::sin(0.3)}})), 1e-15);
    EXPECT_EQ(folded.remainder.size(), 0u);
    EXPECT_THROW(fold_circuit(h, c, 2), std::out_of_range);
}

TEST(transforms, fold_circuit_matches_dense_circuit) {
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 1 + rng() % 4;
        Circuit c(n);
        size_t depth = 1 + rng() % 5;
        for (size_t k = 0; k < depth; ++k) {
            c.append(Gate{random_non_identity(n, rng), angle(rng)});
        }
        auto h = random_operator(n, 8, rng);
        size_t split = rng() % (depth + 1);
        auto [folded, remainder] = fold_circuit(h, c, split);
        ASSERT_EQ(remainder.size(), split);
        // Folding the tail and then conjugating by the prefix reproduces U^dag H U.
        auto u = circuit_matrix(c);
        auto prefix = circuit_matrix(remainder);
        auto lhs = prefix.adjoint() * op_to_matrix(folded) * prefix;
        EXPECT_LE(max_abs_diff(lhs, u.adjoint() * op_to_matrix(h) * u), 1e-12);
    }
}

TEST(transforms, fold_circuit_equals_sequential_symbolic_rotations) {
    std::mt19937_64 rng(34);
    size_t n = 3;
    Circuit c(n);
    for (const char *name : {"a", "b", "c"}) {
        c.append(Gate{random_non_identity(n, rng), Coefficient::parameter(name)});
    }
    auto h = random_operator(n, 6, rng);
    auto manual = h;
    for (size_t k = c.size(); k > 0; --k) {
        manual = rotate_conjugate(manual, c.gates()[k - 1]);
    }
    EXPECT_EQ(fold_circuit(h, c, 0).folded, manual);
}

TEST(transforms, folded_derivative_matches_finite_difference) {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    const double step = 1e-5;
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 1 + rng() % 4;
        Circuit c(n);
        for (const char *name : {"a", "b"}) {
            c.append(Gate{random_non_identity(n, rng), Coefficient::parameter(name)});
        }
        auto h = random_operator(n, 8, rng, false);
        auto folded = fold_circuit(h, c, 0).folded;
        Coefficient energy = zero_state_expectation(folded);
        Bindings at{{"a", angle(rng)}, {"b", angle(rng)}};
        for (const char *name : {"a", "b"}) {
            Complex analytic = evaluate(differentiate(energy, name), at);
            auto plus = at;
            auto minus = at;
            plus[name] += step;
            minus[name] -= step;
            Complex fd = (evaluate(energy, plus) - evaluate(energy, minus)) / (2 * step);
            EXPECT_LE(std::abs(analytic - fd), 1e-6 * std::max(1.0, std::abs(fd)));
        }
        // Same expectation from the dense state vector.
        Circuit numeric(n);
        for (const auto &g : c.gates()) {
            numeric.append(Gate{g.generator, evaluate(g.angle, at).real()});
        }
        std::vector<Complex> zero(size_t{1} << n);
        zero[0] = 1;
        auto u = circuit_matrix(numeric);
        auto dense = expectation(u.adjoint() * op_to_matrix(h) * u, zero);
        EXPECT_LE(std::abs(evaluate(energy, at) - dense), 1e-12);
    }
}

TEST(transforms, clifford_fold_examples) {
    EXPECT_EQ(clifford_fold(op(1, {{"Z0", 1.0}}), gate("X0", 1, kPi / 2)), op(1, {{"Y0", 1.0}}));
    EXPECT_EQ(clifford_fold(op(1, {{"Z0", 1.0}}), gate("X0", 1, kPi)), op(1, {{"Z0", -1.0}}));
    EXPECT_EQ(clifford_fold(op(1, {{"X0", 1.0}}), gate("X0", 1, kPi / 2)), op(1, {{"X0", 1.0}}));
    EXPECT_THROW(clifford_fold(op(1, {{"Z0", 1.0}}), gate("X0", 1, 0.3)), std::invalid_argument);
    EXPECT_THROW(clifford_fold(op(1, {{"Z0", 1.0}}), gate("X0", 1, Coefficient::parameter("t"))),
                 std::invalid_argument);
    EXPECT_NO_THROW(clifford_fold(op(1, {{"Z0", 1.0}}), gate("X0", 1, kPi / 2 + 5e-10)));
}

TEST(transforms, clifford_fold_preserves_term_count) {
    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + rng() % 5;
        auto h = random_operator(n, 20, rng);
        auto p = random_non_identity(n, rng);
        int k = static_cast<int>(rng() % 9) - 4;
        Gate g{p, k * kPi / 2};
        auto folded = clifford_fold(h, g);
        EXPECT_EQ(folded.size(), h.size());
        auto u = rotation_matrix(g);
        EXPECT_LE(max_abs_diff(op_to_matrix(folded), u.adjoint() * op_to_matrix(h) * u), 1e-12);
    }
}

TEST(transforms, controlled_generator_examples) {
    auto c = controlled_generator(op(2, {{"X1", 1.0}}), 0);
    EXPECT_EQ(c, op(2, {{"X1", 0.5}, {"Z0 X1", -0.5}}));
    EXPECT_TRUE(controlled_generator(PauliOperator(2), 0).empty());
    auto symbolic = controlled_generator(op(2, {{"X1", Coefficient::parameter("t")}}), 0);
    EXPECT_EQ(symbolic.size(), 2u);
    EXPECT_EQ(substitute_all(symbolic, {{"t", 2.0}}), op(2, {{"X1", 1.0}, {"Z0 X1", -1.0}}));
    EXPECT_THROW(controlled_generator(op(2, {{"X1", 1.0}}), 2), std::invalid_argument);
    EXPECT_THROW(controlled_generator(op(2, {{"X0", 1.0}}), 0), std::invalid_argument);
}

TEST(transforms, controlled_generator_matches_projector_formula) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 2 + rng() % 3;
        size_t control = rng() % n;
        std::vector<PauliOperator::Term> terms;
        for (int t = 0; t < 5; ++t) {
            auto p = random_string(n, rng);
            terms.emplace_back(PauliStringBuilder(p).set(control, Pauli::I).build(), Complex(0.3 * t + 0.1, -0.2));
        }
        PauliOperator g(n, std::move(terms));
        auto z = to_matrix(PauliStringBuilder(n).set(control, Pauli::Z).build());
        auto projector = (DenseMatrix::identity(z.dim()) - z).scaled(0.5);
        EXPECT_LE(max_abs_diff(op_to_matrix(controlled_generator(g, control)), projector * op_to_matrix(g)), 1e-15);
    }
}

TEST(transforms, gradient_operator_examples) {
    EXPECT_EQ(gradient_operator(op(1, {{"Z0", 1.0}}), op(1, {{"Y0", 1.0}})), op(1, {{"X0", Complex(0, -0.5)}}));
    EXPECT_EQ(gradient_operator(op(1, {{"Z0", 1.0}}), op(1, {{"X0", 1.0}})), op(1, {{"Y0", Complex(0, 0.5)}}));
    EXPECT_TRUE(gradient_operator(op(2, {{"Z0", 1.0}}), op(2, {{"Z0 Z1", 1.0}})).empty());
    EXPECT_THROW(gradient_operator(op(1, {{"Z0", 1.0}}), op(2, {{"Z0", 1.0}})), std::invalid_argument);
}

// With V(phi) = exp(phi G / 4) for anti-Hermitian G, d/dphi <V^dag H V> at 0 is
// (1/4)<[H, G]>. A Pauli rotation U_P(phi) has G = -2i P.
TEST(transforms, gradient_matches_finite_difference_of_rotation) {
    std::mt19937_64 rng(38);
    const double step = 1e-5;
    for (int trial = 0; trial < 30; ++trial) {
        size_t n = 1 + rng() % 4;
        auto h = random_operator(n, 10, rng, false);
        auto p = random_non_identity(n, rng);
        auto psi = random_state(n, rng);
        auto mh = op_to_matrix(h);
        auto energy = [&](double phi) {
            auto u = rotation_matrix(Gate{p, phi});
            return expectation(u.adjoint() * mh * u, psi).real();
        };
        double fd = (energy(step) - energy(-step)) / (2 * step);
        auto g = PauliOperator::term(p, Complex(0, -2));
        Complex analytic = expectation(op_to_matrix(gradient_operator(h, g)), psi);
        EXPECT_LE(std::abs(analytic.imag()), 1e-12);
        EXPECT_LE(std::abs(analytic.real() - fd), 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST(transforms, zero_state_expectation_matches_dense) {
    std::mt19937_64 rng(39);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 1 + rng() % 5;
        auto h = random_operator(n, 30, rng);
        std::vector<Complex> zero(size_t{1} << n);
        zero[0] = 1;
        EXPECT_LE(std::abs(zero_state_expectation(h).numeric() - expectation(op_to_matrix(h), zero)), 1e-12);
    }
}

TEST(transforms, circuit_text_round_trip) {
    Circuit c(3, {gate("X0 Y2", 3, 0.25), gate("Z1", 3, Coefficient::parameter("t")), gate("I", 3, -1.5)});
    std::ostringstream out;
    write_circuit(out, c);
    EXPECT_EQ(out.str(),
              "circuit v1 qubits=3\n"
              "rot ; X0 Y2 ; (0.25,0)\n"
              "rot ; Z1 ; (expr (param t))\n"
              "rot ; I ; (-1.5,0)\n");
    std::istringstream in(out.str());
    auto back = read_circuit(in);
    ASSERT_EQ(back.size(), c.size());
    for (size_t k = 0; k < c.size(); ++k) {
        EXPECT_EQ(back.gates()[k].generator, c.gates()[k].generator);
        EXPECT_EQ(back.gates()[k].angle, c.gates()[k].angle);
    }
    std::istringstream bad_header("circuit v2 qubits=3\n");
    EXPECT_THROW(read_circuit(bad_header), std::invalid_argument);
    std::istringstream bad_line("circuit v1 qubits=1\ngate ; X0 ; (1,0)\n");
    EXPECT_THROW(read_circuit(bad_line), std::invalid_argument);
    EXPECT_THROW(Circuit(2, {gate("X0", 3, 0.1)}), std::invalid_argument);
}
