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

// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "pauliarith/bench.h"
#include "pauliarith/cliques.h"
#include "pauliarith/dense_oracle.h"
#include "pauliarith/dla.h"
#include "pauliarith/transforms.h"
#include "test_util.h"

using namespace pauliarith;
using pauliarith::testing::all_strings;
using pauliarith::testing::bits_str;
using pauliarith::testing::random_operator;
using pauliarith::testing::random_string;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *pattern, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

PauliString non_identity(size_t n, std::mt19937_64 &rng) {
    while (true) {
        auto p = random_string(n, rng);
        if (!p.is_identity()) {
            return p;
        }
    }
}

// Counts pairs with i^e M(r) != M(p) M(q).
size_t multiply_mismatches(size_t n) {
    auto strings = all_strings(n);
    std::vector<DenseMatrix> mats;
    mats.reserve(strings.size());
    for (const auto &p : strings) {
        mats.push_back(to_matrix(p));
    }
    size_t bad = 0;
    for (size_t a = 0; a < strings.size(); ++a) {
        for (size_t b = 0; b < strings.size(); ++b) {
            auto prod = multiply(strings[a], strings[b]);
            bad += !(mats[a] * mats[b] == to_matrix(prod.string).scaled(prod.phase.scalar()));
        }
    }
    return bad;
}

Outcome exhaustive_multiply() {
    auto start = Clock::now();
    size_t pairs = 0;
    size_t bad = 0;
    for (size_t n : {1, 2, 4}) {
        bad += multiply_mismatches(n);
        pairs += size_t{1} << (4 * n);
    }
    double t = seconds_since(start);
    return {bad == 0 && t < 5.0, fmt("%.0f ordered pairs over N=1,2,4, %.0f mismatches, %.2f s (limit 5 s)",
                                     static_cast<double>(pairs), static_cast<double>(bad), t)};
}

Outcome exhaustive_commutation() {
    size_t pairs = 0;
    size_t bad = 0;
    for (size_t n = 1; n <= 3; ++n) {
        auto strings = all_strings(n);
        std::vector<DenseMatrix> mats;
        for (const auto &p : strings) {
            mats.push_back(to_matrix(p));
        }
        for (size_t a = 0; a < strings.size(); ++a) {
            for (size_t b = 0; b < strings.size(); ++b) {
                ++pairs;
                auto dense = commutator(mats[a], mats[b]);
                bool dense_zero = dense == DenseMatrix(dense.dim());
                bool fast = commutes(strings[a], strings[b]);
                auto c = commutator(strings[a], strings[b]);
                bool ok = fast == dense_zero && fast == !c.has_value();
                if (ok && c) {
                    ok = dense == to_matrix(c->string).scaled(c->coefficient());
                }
                bad += !ok;
            }
        }
    }
    return {bad == 0, fmt("%.0f pairs over N<=3, %.0f mismatches", static_cast<double>(pairs),
                          static_cast<double>(bad))};
}

Outcome encoding_vectors() {
    std::vector<QubitLetter> first{{1, Pauli::X}, {2, Pauli::Y}, {4, Pauli::X}, {6, Pauli::Z}, {7, Pauli::Z}};
    std::vector<QubitLetter> second{{2, Pauli::Z}, {3, Pauli::X}, {4, Pauli::Z}};
    auto p = encode(first, 8);
    auto q = encode(second, 5);
    std::string a = bits_str(p.x_words(), 8) + "|" + bits_str(p.y_words(), 8);
    std::string b = bits_str(q.x_words(), 5) + "|" + bits_str(q.y_words(), 5);
    bool ok = a == "01001011|00100011" && b == "00111|00101";
    return {ok, a + ", " + b};
}

Outcome product_string() {
    auto word = [](std::string_view dense) {
        PauliStringBuilder b(dense.size());
        for (size_t i = 0; i < dense.size(); ++i) {
            b.set(i, pauli_from_char(dense[i]));
        }
        return std::move(b).build();
    };
    auto p = word("XYZXYZ");
    auto q = word("YZXZXY");
    auto r = multiply(p, q);
    bool dense_ok = to_matrix(p) * to_matrix(q) == to_matrix(r.string).scaled(r.phase.scalar());
    bool ok = r.string.dense_str() == "ZXYYZX" && r.phase.value() == 0 && dense_ok;
    return {ok, "result " + r.string.dense_str() + ", e=" + std::to_string(r.phase.value()) +
                    (dense_ok ? ", 64x64 oracle agrees" : ", 64x64 oracle disagrees")};
}

Outcome operator_product_oracle() {
    std::mt19937_64 rng(1001);
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 1 + rng() % 6;
        auto a = random_operator(n, 32, rng);
        auto b = random_operator(n, 32, rng);
        worst = std::max(worst, max_abs_diff(op_to_matrix(op_mul(a, b)), op_to_matrix(a) * op_to_matrix(b)));
    }
    return {worst <= 1e-12, fmt("100 pairs, max entry error %.3g (tol 1e-12)", worst)};
}

Outcome folding_oracle() {
    constexpr double kPi = std::numbers::pi;
    const double grid[] = {0.0, kPi / 2, -kPi / 2, kPi, 0.37, -1.3, 2.2};
    std::mt19937_64 rng(1002);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    double dense_err = 0;
    double subst_err = 0;
    double deriv_rel = 0;
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + rng() % 5;
        auto h = random_operator(n, 16, rng);
        auto p = non_identity(n, rng);
        for (double theta : grid) {
            Gate g{p, theta};
            auto u = rotation_matrix(g);
            dense_err =
                std::max(dense_err, max_abs_diff(op_to_matrix(rotate_conjugate(h, g)), u.adjoint() * op_to_matrix(h) * u));
            auto symbolic = substitute_all(rotate_conjugate(h, Gate{p, Coefficient::parameter("t")}), {{"t", theta}});
            subst_err = std::max(subst_err, max_coefficient_distance(symbolic, rotate_conjugate(h, g)));
        }
        // Derivative of a folded two-gate expectation in |0...0>.
        Circuit c(n, {Gate{non_identity(n, rng), Coefficient::parameter("a")},
                      Gate{non_identity(n, rng), Coefficient::parameter("b")}});
        auto hr = random_operator(n, 8, rng, false);
        auto energy = zero_state_expectation(fold_circuit(hr, c, 0).folded);
        Bindings at{{"a", angle(rng)}, {"b", angle(rng)}};
        const double step = 1e-5;
        for (const char *name : {"a", "b"}) {
            Complex analytic = evaluate(differentiate(energy, name), at);
            auto plus = at;
            auto minus = at;
            plus[name] += step;
            minus[name] -= step;
            Complex fd = (evaluate(energy, plus) - evaluate(energy, minus)) / (2 * step);
            deriv_rel = std::max(deriv_rel, std::abs(analytic - fd) / std::max(1.0, std::abs(fd)));
        }
    }
    bool ok = dense_err <= 1e-12 && subst_err <= 1e-12 && deriv_rel <= 1e-6;
    return {ok, fmt("U^dag H U err %.3g, substitute err %.3g (tol 1e-12), derivative rel err %.3g (tol 1e-6)",
                    dense_err, subst_err, deriv_rel)};
}

Outcome dla() {
    std::string detail;
    bool ok = true;
    for (size_t n = 2; n <= 4; ++n) {
        auto gens = build_so2n_generators(n);
        size_t d = lie_closure(gens).dimension();
        std::vector<DenseMatrix> mats;
        for (const auto &g : gens) {
            mats.push_back(to_matrix(g));
        }
        size_t dense = matrix_closure(mats);
        ok = ok && d == n * (2 * n - 1) && dense == d;
        detail += "n=" + std::to_string(n) + ": dim " + std::to_string(d) + " (dense " + std::to_string(dense) + "); ";
    }
    // Antisymmetry and Jacobi on every closed basis here with d <= 15.
    size_t checked = 0;
    for (const auto &basis : {lie_closure(std::vector<PauliString>{parse_word("X0", 1), parse_word("Z0", 1)}),
                              lie_closure(build_so2n_generators(2)), lie_closure(build_so2n_generators(3))}) {
        size_t d = basis.dimension();
        std::vector<Complex> t(d * d * d);
        for (const auto &f : structure_constants(basis)) {
            ok = ok && (f.value == Complex(0, 2) || f.value == Complex(0, -2));
            t[(f.alpha * d + f.beta) * d + f.gamma] = f.value;
        }
        auto at = [&](size_t a, size_t b, size_t c) { return t[(a * d + b) * d + c]; };
        for (size_t a = 0; a < d; ++a) {
            for (size_t b = 0; b < d; ++b) {
                for (size_t c = 0; c < d; ++c) {
                    ok = ok && at(a, b, c) == -at(b, a, c);
                    for (size_t v = 0; v < d; ++v) {
                        Complex sum = 0;
                        for (size_t m = 0; m < d; ++m) {
                            sum += at(b, c, m) * at(a, m, v) + at(c, a, m) * at(b, m, v) + at(a, b, m) * at(c, m, v);
                        }
                        ok = ok && sum == Complex(0);
                        ++checked;
                    }
                }
            }
        }
    }
    detail += std::to_string(checked) + " Jacobi sums exact";
    return {ok, detail};
}

Outcome cliques() {
    std::mt19937_64 rng(1003);
    size_t valid = 0;
    for (int trial = 0; trial < 50; ++trial) {
        size_t n = 1 + rng() % 10;
        auto h = random_operator(n, 200, rng);
        valid += verify_partition(partition_commuting(h), h);
    }
    std::vector<PauliOperator::Term> diag;
    for (const char *w : {"Z0", "Z1", "Z0 Z1", "Z2 Z5", "I"}) {
        diag.emplace_back(parse_word(w, 6), 0.5);
    }
    size_t one = partition_commuting(PauliOperator(6, std::move(diag))).cliques.size();
    return {valid == 50 && one == 1, fmt("%.0f/50 partitions valid, all-commuting input gives %.0f clique(s)",
                                         static_cast<double>(valid), static_cast<double>(one))};
}

double measured_slope(BenchMode mode, std::vector<size_t> sizes) {
    BenchConfig cfg;
    cfg.mode = mode;
    cfg.sizes = std::move(sizes);
    cfg.string_length = 500;
    cfg.ham_size = 500;
    cfg.repetitions = 5;
    cfg.warmup = 1;
    cfg.seed = 7;
    return fit_scaling(run_benchmark(cfg));
}

Outcome scaling() {
    auto start = Clock::now();
    double size_slope = measured_slope(BenchMode::OpMulSize, {100, 200, 400, 800});
    double length_slope = measured_slope(BenchMode::OpMulLength, {125, 250, 500, 1000});
    bool ok = size_slope >= 1.7 && size_slope <= 2.3 && length_slope <= 1.3;
    return {ok, fmt("size slope %.3f (want [1.7, 2.3]), length slope %.3f (want <= 1.3), %.1f s", size_slope,
                    length_slope, seconds_since(start))};
}

std::string data_rows_without_timing(const std::vector<BenchRecord> &records) {
    std::ostringstream out;
    for (const auto &r : records) {
        out << mode_name(r.mode) << ',' << r.param << ',' << r.rep << ',' << r.out_terms << ',' << r.peak_terms
            << '\n';
    }
    return out.str();
}

Outcome reproducibility() {
    BenchConfig cfg;
    cfg.mode = BenchMode::OpMulSize;
    cfg.sizes = {20, 40, 80};
    cfg.string_length = 64;
    cfg.repetitions = 2;
    cfg.seed = 42;
    cfg.complex_coeffs = true;
    bool inputs_equal = true;
    for (size_t param : cfg.sizes) {
        for (size_t rep = 0; rep < cfg.repetitions; ++rep) {
            auto [a1, b1] = op_mul_inputs(cfg, param, rep);
            auto [a2, b2] = op_mul_inputs(cfg, param, rep);
            inputs_equal = inputs_equal && to_text(a1) == to_text(a2) && to_text(b1) == to_text(b2);
        }
    }
    bool rows_equal = data_rows_without_timing(run_benchmark(cfg)) == data_rows_without_timing(run_benchmark(cfg));
    cfg.seed = 43;
    bool seed_matters = to_text(op_mul_inputs(cfg, 20, 0).first) != to_text(op_mul_inputs({}, 20, 0).first);
    return {inputs_equal && rows_equal && seed_matters,
            std::string(inputs_equal ? "inputs bit-identical" : "inputs differ") +
                (rows_equal ? ", CSV rows identical" : ", CSV rows differ") +
                (seed_matters ? ", other seed differs" : ", other seed collides")};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"exhaustive multiply", exhaustive_multiply},
        {"exhaustive commutation", exhaustive_commutation},
        {"encoding vectors", encoding_vectors},
        {"product string", product_string},
        {"operator product oracle", operator_product_oracle},
        {"folding oracle", folding_oracle},
        {"dla closure and structure constants", dla},
        {"commuting cliques", cliques},
        {"op_mul scaling slopes", scaling},
        {"reproducibility", reproducibility},
    };
    int failures = 0;
    int index = 0;
    for (const auto &c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", index, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
