#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

namespace axiobench {

// Benchmark-wide knobs. Defaults mirror the published protocol: ten-bit
// inputs, period-seven patterns, 5000 standing in for infinity, 20 runs
// averaged inside the denoising/generalisation trials, a 100 µs timing
// floor with 100 batches per timing trial at an 80/20 random/structured
// input mix, and a one-sided z threshold of 3.090.
struct TestConfig {
    std::size_t input_size = 10;      // L: channels per input
    std::size_t pattern_period = 7;   // N: canonical pattern length
    std::uint64_t simulated_infinity = 5000;
    std::uint64_t runs_per_trial = 20;
    std::uint64_t rho = 10;           // prefix-to-target length ratio
    std::uint64_t timing_resolution_floor_us = 100;
    std::uint64_t batches_per_timing_trial = 100;
    double structured_input_fraction = 0.2;
    double z_threshold = 3.090;
    std::uint64_t master_seed = 0;
    // Optional absolute ceiling on the complex instance's mean per-update
    // time during the liveness test; unset = relative comparison only.
    std::optional<double> max_update_micros{};

    void validate() const {
        if (input_size < 1)
            throw std::invalid_argument("config: input_size must be >= 1");
        if (pattern_period < 2)
            throw std::invalid_argument("config: pattern_period must be >= 2");
        if (simulated_infinity < 1)
            throw std::invalid_argument("config: simulated_infinity must be >= 1");
        if (rho < 2)
            throw std::invalid_argument("config: rho must be >= 2");
        if (structured_input_fraction < 0.0 || structured_input_fraction > 1.0)
            throw std::invalid_argument("config: structured_input_fraction must be in [0, 1]");
        if (runs_per_trial < 1)
            throw std::invalid_argument("config: runs_per_trial must be >= 1");
        if (batches_per_timing_trial < 1)
            throw std::invalid_argument("config: batches_per_timing_trial must be >= 1");
        if (timing_resolution_floor_us < 1)
            throw std::invalid_argument("config: timing_resolution_floor_us must be >= 1");
        if (max_update_micros && *max_update_micros <= 0.0)
            throw std::invalid_argument("config: max_update_micros must be positive");
    }
};

}  // namespace axiobench
