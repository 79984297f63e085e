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

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pauliarith/bench.h"

using namespace pauliarith;

namespace {

constexpr int kConfigError = 2;

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Pauli arithmetic scaling benchmarks (CSV output)"};
    std::string mode_text;
    BenchConfig cfg;
    app.add_option("--mode", mode_text, "op-mul-size | op-mul-length | dla-closure | dla-structconst")->required();
    app.add_option("--sizes", cfg.sizes, "Swept parameter values, comma separated")->delimiter(',')->required();
    app.add_option("--length", cfg.string_length, "Pauli string length for op-mul-size")->capture_default_str();
    app.add_option("--ham-size", cfg.ham_size, "Hamiltonian term count for op-mul-length")->capture_default_str();
    app.add_option("--reps", cfg.repetitions, "Timed repetitions per parameter value")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Base seed for input generation")->capture_default_str();
    app.add_option("--out", cfg.output_path, "CSV output path")->required();
    app.add_option("--threads", cfg.threads, "Worker threads for operator products")->capture_default_str();
    app.add_flag("--complex-coeffs", cfg.complex_coeffs, "Draw complex instead of real coefficients");
    app.add_option("--warmup", cfg.warmup, "Untimed runs per parameter value")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kConfigError;
    }

    auto mode = parse_mode(mode_text);
    if (!mode) {
        std::cerr << "error: unknown mode '" << mode_text << "'\n";
        return kConfigError;
    }
    cfg.mode = *mode;

    std::vector<BenchRecord> records;
    try {
        cfg.validate();
        {
            std::ofstream probe(cfg.output_path);
            if (!probe) {
                std::cerr << "error: cannot write " << cfg.output_path << "\n";
                return kConfigError;
            }
        }
        records = run_benchmark(cfg);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << records.size() << " records written to " << cfg.output_path << "\n";
    if (cfg.sizes.size() >= 3) {
        std::printf("log-log slope: %.4f\n", fit_scaling(records));
    }
    return 0;
}
