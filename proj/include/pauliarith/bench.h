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

#ifndef PAULIARITH_BENCH_H
#define PAULIARITH_BENCH_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pauliarith/pauli_operator.h"

namespace pauliarith {

/// splitmix64 finalizer.
constexpr uint64_t splitmix64_mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// splitmix64 generator: state advances by 0x9E3779B97F4A7C15 per draw.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }
    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64_mix(state_);
    }
    /// Uniform in [0, 1) from the top 53 bits.
    double uniform01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
    /// Uniform in [-1, 1).
    double uniform_signed() {
        return 2.0 * uniform01() - 1.0;
    }

   private:
    uint64_t state_;
};

/// Samples num_terms strings with each letter drawn uniformly from {I,X,Y,Z}
/// (top two bits of one draw per qubit: 0=I, 1=X, 2=Y, 3=Z, qubit 0 first),
/// followed per term by a real coefficient uniform in [-1, 1) and, when
/// complex_coeffs is set, an imaginary part drawn the same way. Repeated strings
/// are merged by addition.
PauliOperator random_hamiltonian(size_t num_qubits, size_t num_terms, SplitMix64 &rng, bool complex_coeffs = false);

enum class BenchMode { OpMulSize, OpMulLength, DlaClosure, DlaStructConst };

std::string_view mode_name(BenchMode mode);
std::optional<BenchMode> parse_mode(std::string_view name);

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct BenchConfig {
    BenchMode mode = BenchMode::OpMulSize;
    /// Swept parameter: Hamiltonian sizes, string lengths, or qubit counts for dla-*.
    std::vector<size_t> sizes;
    size_t string_length = 500;
    size_t ham_size = 500;
    size_t repetitions = 1;
    uint64_t seed = 0;
    /// Empty: no CSV is written.
    std::string output_path;
    unsigned threads = 1;
    bool complex_coeffs = false;
    size_t warmup = 0;

    /// Throws ConfigError.
    void validate() const;
};

struct BenchRecord {
    BenchMode mode;
    size_t param;
    size_t rep;
    double seconds;
    size_t out_terms;
    size_t peak_terms;
};

/// Seed of the input stream for one (mode, parameter, repetition) cell.
uint64_t stream_seed(uint64_t seed, BenchMode mode, size_t param, size_t rep);

/// The two random operands used by the op-mul modes for one cell.
std::pair<PauliOperator, PauliOperator> op_mul_inputs(const BenchConfig &cfg, size_t param, size_t rep);

/// Runs every (parameter, repetition) cell, timing only the measured operation.
/// Writes the CSV when output_path is set; throws std::runtime_error if it cannot
/// be opened (before any timing happens).
std::vector<BenchRecord> run_benchmark(const BenchConfig &cfg);

inline constexpr std::string_view kCsvHeader = "mode,param,rep,seconds,out_terms,peak_terms";
void write_csv(std::ostream &out, const std::vector<BenchRecord> &records);

/// Least-squares slope of log(mean seconds) against log(param). Throws
/// std::invalid_argument with fewer than three distinct parameter values.
double fit_scaling(const std::vector<BenchRecord> &records);

}  // namespace pauliarith

#endif
