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

#include "pauliarith/bench.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>

#include "pauliarith/coeff.h"
#include "pauliarith/dla.h"

namespace pauliarith {

PauliOperator random_hamiltonian(size_t num_qubits, size_t num_terms, SplitMix64 &rng, bool complex_coeffs) {
    std::vector<PauliOperator::Term> terms;
    terms.reserve(num_terms);
    for (size_t t = 0; t < num_terms; ++t) {
        PauliStringBuilder builder(num_qubits);
        for (size_t q = 0; q < num_qubits; ++q) {
            auto letter = static_cast<Pauli>(rng.next() >> 62);
            if (letter != Pauli::I) {
                builder.set(q, letter);
            }
        }
        double re = rng.uniform_signed();
        double im = complex_coeffs ? rng.uniform_signed() : 0.0;
        terms.emplace_back(std::move(builder).build(), Coefficient(Complex{re, im}));
    }
    return PauliOperator(num_qubits, std::move(terms));
}

std::string_view mode_name(BenchMode mode) {
    switch (mode) {
        case BenchMode::OpMulSize:
            return "op-mul-size";
        case BenchMode::OpMulLength:
            return "op-mul-length";
        case BenchMode::DlaClosure:
            return "dla-closure";
        case BenchMode::DlaStructConst:
            return "dla-structconst";
    }
    return "";
}

std::optional<BenchMode> parse_mode(std::string_view name) {
    for (auto m : {BenchMode::OpMulSize, BenchMode::OpMulLength, BenchMode::DlaClosure, BenchMode::DlaStructConst}) {
        if (mode_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

void BenchConfig::validate() const {
    if (sizes.empty()) {
        throw ConfigError("at least one size is required");
    }
    for (size_t s : sizes) {
        if (s < 1) {
            throw ConfigError("sizes must be >= 1");
        }
        if ((mode == BenchMode::DlaClosure || mode == BenchMode::DlaStructConst) && s < 2) {
            throw ConfigError("dla modes need qubit counts >= 2");
        }
    }
    if (repetitions < 1) {
        throw ConfigError("repetitions must be >= 1");
    }
    if (string_length < 1 || ham_size < 1) {
        throw ConfigError("length and ham-size must be >= 1");
    }
    if (threads < 1) {
        throw ConfigError("threads must be >= 1");
    }
}

uint64_t stream_seed(uint64_t seed, BenchMode mode, size_t param, size_t rep) {
    uint64_t s = splitmix64_mix(seed + 0x9E3779B97F4A7C15ULL);
    s = splitmix64_mix(s ^ (static_cast<uint64_t>(mode) + 1));
    s = splitmix64_mix(s ^ static_cast<uint64_t>(param));
    s = splitmix64_mix(s ^ static_cast<uint64_t>(rep));
    return s;
}

std::pair<PauliOperator, PauliOperator> op_mul_inputs(const BenchConfig &cfg, size_t param, size_t rep) {
    size_t qubits = cfg.mode == BenchMode::OpMulSize ? cfg.string_length : param;
    size_t terms = cfg.mode == BenchMode::OpMulSize ? param : cfg.ham_size;
    SplitMix64 rng(stream_seed(cfg.seed, cfg.mode, param, rep));
    auto a = random_hamiltonian(qubits, terms, rng, cfg.complex_coeffs);
    auto b = random_hamiltonian(qubits, terms, rng, cfg.complex_coeffs);
    return {std::move(a), std::move(b)};
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start, Clock::time_point stop) {
    // Floor at the clock tick so a record never reports zero time.
    return std::max(std::chrono::duration<double>(stop - start).count(), 1e-9);
}

BenchRecord run_cell(const BenchConfig &cfg, size_t param, size_t rep) {
    BenchRecord record{cfg.mode, param, rep, 0, 0, 0};
    if (cfg.mode == BenchMode::OpMulSize || cfg.mode == BenchMode::OpMulLength) {
        auto [a, b] = op_mul_inputs(cfg, param, rep);
        size_t peak = 0;
        auto start = Clock::now();
        auto product = op_mul(a, b, MulOptions{cfg.threads, kDefaultPruneTol, &peak});
        auto stop = Clock::now();
        record.seconds = elapsed_seconds(start, stop);
        record.out_terms = product.size();
        record.peak_terms = peak;
    } else if (cfg.mode == BenchMode::DlaClosure) {
        auto generators = build_so2n_generators(param);
        auto start = Clock::now();
        auto basis = lie_closure(generators);
        auto stop = Clock::now();
        record.seconds = elapsed_seconds(start, stop);
        record.out_terms = basis.dimension();
        record.peak_terms = basis.dimension();
    } else {
        auto basis = lie_closure(build_so2n_generators(param));
        auto start = Clock::now();
        auto constants = structure_constants(basis);
        auto stop = Clock::now();
        record.seconds = elapsed_seconds(start, stop);
        record.out_terms = constants.size();
        record.peak_terms = basis.dimension();
    }
    return record;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const BenchConfig &cfg) {
    cfg.validate();
    std::ofstream csv;
    if (!cfg.output_path.empty()) {
        csv.open(cfg.output_path);
        if (!csv) {
            throw std::runtime_error("cannot open output file " + cfg.output_path);
        }
    }
    std::vector<BenchRecord> records;
    for (size_t param : cfg.sizes) {
        for (size_t w = 0; w < cfg.warmup; ++w) {
            run_cell(cfg, param, cfg.repetitions + w);
        }
        for (size_t rep = 0; rep < cfg.repetitions; ++rep) {
            records.push_back(run_cell(cfg, param, rep));
        }
    }
    if (csv.is_open()) {
        write_csv(csv, records);
        if (!csv) {
            throw std::runtime_error("failed writing " + cfg.output_path);
        }
    }
    return records;
}

void write_csv(std::ostream &out, const std::vector<BenchRecord> &records) {
    out << kCsvHeader << '\n';
    for (const auto &r : records) {
        out << mode_name(r.mode) << ',' << r.param << ',' << r.rep << ',' << format_double(r.seconds) << ','
            << r.out_terms << ',' << r.peak_terms << '\n';
    }
}

double fit_scaling(const std::vector<BenchRecord> &records) {
    std::map<size_t, std::pair<double, size_t>> sums;
    for (const auto &r : records) {
        auto &[total, count] = sums[r.param];
        total += r.seconds;
        ++count;
    }
    if (sums.size() < 3) {
        throw std::invalid_argument("fit_scaling: need at least 3 distinct parameter values, got " +
                                    std::to_string(sums.size()));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = static_cast<double>(sums.size());
    for (const auto &[param, acc] : sums) {
        double x = std::log(static_cast<double>(param));
        double y = std::log(acc.first / static_cast<double>(acc.second));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace pauliarith
