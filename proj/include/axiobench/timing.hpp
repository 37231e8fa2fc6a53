#pragma once

#include "axioms.hpp"
#include "config.hpp"
#include "model.hpp"
#include "signals.hpp"
#include "stats.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace axiobench {

namespace detail {

inline Input random_bits(Rng& rng, std::size_t width) {
    Input x(width);
    for (std::size_t i = 0; i < width; ++i)
        x.set(i, rng.bit());
    return x;
}

inline double time_updates(Model& m, const std::vector<Input>& batch) {
    const auto t0 = std::chrono::steady_clock::now();
    for (const Input& x : batch)
        m.update(x);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace detail

// Worst-case probe streams mixed into timing batches: a silent pattern, two
// maximally dense alternations, and one random short cycle (re-drawn per
// trial). Consecutive structured slots rotate through the streams, each
// advancing its own cursor.
class StructuredPool {
public:
    StructuredPool(Rng& rng, const TestConfig& c) {
        const std::size_t width = c.input_size;
        Sequence zero;
        zero.items.emplace_back(width);
        Input even(width), odd(width);
        for (std::size_t i = 0; i < width; ++i)
            (i % 2 == 0 ? even : odd).set(i, true);
        Sequence alt0, alt1;
        alt0.items = {even, odd};
        alt1.items = {odd, even};
        streams_ = {zero, alt0, alt1, random_admissible(rng, width, 3, true)};
        cursors_.assign(streams_.size(), 0);
    }

    const Input& next() {
        const std::size_t j = turn_++ % streams_.size();
        const Sequence& s = streams_[j];
        return s.items[cursors_[j]++ % s.size()];
    }

private:
    std::vector<Sequence> streams_;
    std::vector<std::size_t> cursors_;
    std::size_t turn_ = 0;
};

// A batch is mostly uniform random bit patterns with structured probes woven
// in at a fixed stride matching structured_input_fraction.
inline std::vector<Input> make_timing_batch(Rng& rng, const TestConfig& c,
                                            std::size_t n, StructuredPool& pool) {
    std::size_t stride = 0;
    if (c.structured_input_fraction > 0.0)
        stride = std::max<std::size_t>(
            1, static_cast<std::size_t>(1.0 / c.structured_input_fraction + 0.5));
    std::vector<Input> batch;
    batch.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (stride != 0 && (i + 1) % stride == 0)
            batch.push_back(pool.next());
        else
            batch.push_back(detail::random_bits(rng, c.input_size));
    }
    return batch;
}

// Doubles the batch size until a batch of updates on a fresh instance takes
// longer than the resolution floor, so per-batch durations rise well above
// clock granularity. Probe instances are discarded; the instances under
// measurement are untouched.
inline std::size_t calibrate_batch_size(const ModelFactory& f, const TestConfig& c,
                                        Rng& rng) {
    const double floor_seconds =
        static_cast<double>(c.timing_resolution_floor_us) * 1e-6;
    constexpr std::size_t kMaxBatch = std::size_t{1} << 24;
    std::size_t batch_size = 1;
    while (batch_size < kMaxBatch) {
        auto probe = f.blank();
        std::vector<Input> batch;
        batch.reserve(batch_size);
        for (std::size_t i = 0; i < batch_size; ++i)
            batch.push_back(detail::random_bits(rng, c.input_size));
        if (detail::time_updates(*probe, batch) > floor_seconds)
            return batch_size;
        batch_size *= 2;
    }
    return kMaxBatch;
}

struct TimingTrialOutcome {
    std::optional<double> z;   // absent: indeterminate (too few nonzero diffs)
    std::uint64_t batches = 0;
    std::uint64_t nonzero = 0;
    double trained_seconds = 0.0;   // total time in the trained instance
    std::uint64_t trained_updates = 0;
};

// One paired-measurement trial: both instances consume identical batches,
// order alternating per batch; differences are trained-minus-baseline batch
// durations in seconds.
inline TimingTrialOutcome timing_trial(Model& baseline, Model& trained,
                                       const TestConfig& c, Rng& rng,
                                       std::size_t batch_size, StructuredPool& pool,
                                       std::uint64_t batches) {
    PairedSample sample;
    sample.diffs.reserve(batches);
    double out_trained_seconds = 0.0;
    for (std::uint64_t b = 0; b < batches; ++b) {
        const std::vector<Input> batch = make_timing_batch(rng, c, batch_size, pool);
        double t_baseline = 0.0, t_trained = 0.0;
        if (b % 2 == 0) {
            t_baseline = detail::time_updates(baseline, batch);
            t_trained = detail::time_updates(trained, batch);
        } else {
            t_trained = detail::time_updates(trained, batch);
            t_baseline = detail::time_updates(baseline, batch);
        }
        sample.diffs.push_back(t_trained - t_baseline);
        out_trained_seconds += t_trained;
    }
    TimingTrialOutcome out;
    out.batches = batches;
    out.trained_seconds = out_trained_seconds;
    out.trained_updates = batches * static_cast<std::uint64_t>(batch_size);
    for (double d : sample.diffs)
        if (d != 0.0)
            ++out.nonzero;
    out.z = wilcoxon_one_sided_z(sample);
    return out;
}

// Updates on a long-exposed instance must not be systematically slower than
// on a fresh one. One persistent baseline instance and one pre-fed instance
// consume identical batches for simulated_infinity trials; each trial is a
// one-sided signed-rank comparison against z_threshold. Always serial:
// concurrent timing would contaminate the measurements.
inline TestResult test_12_liveness(const ModelFactory& f, const TestConfig& c,
                                   unsigned = 0) {
    detail::Stopwatch sw;
    TestResult r;
    r.axiom_id = 12;
    r.name = test_name(12);

    Rng setup_rng(derive_seed(c.master_seed, 12, 0));
    auto baseline = f.blank();
    auto trained = f.blank();
    {
        const Sequence priming = random_admissible(
            setup_rng, c.input_size, c.simulated_infinity, false);
        feed(*trained, priming);
    }
    const std::size_t batch_size = calibrate_batch_size(f, c, setup_rng);

    for (std::uint64_t trial = 1; trial <= c.simulated_infinity; ++trial) {
        r.trials_run = trial;
        Rng rng(derive_seed(c.master_seed, 12, trial));
        StructuredPool pool(rng, c);
        std::uint64_t batches = c.batches_per_timing_trial;
        TimingTrialOutcome outcome;
        bool decided = false;
        for (int round = 0; round <= 3; ++round) {
            outcome = timing_trial(*baseline, *trained, c, rng, batch_size, pool,
                                   batches);
            if (outcome.z) {
                decided = true;
                break;
            }
            batches *= 2;  // indeterminate: too many zero diffs, retry larger
        }
        if (!decided) {
            r.passed = false;
            r.first_failure_trial = trial;
            r.diagnostics = "trial " + std::to_string(trial) +
                            " indeterminate after retries: only " +
                            std::to_string(outcome.nonzero) + " of " +
                            std::to_string(outcome.batches) +
                            " paired differences nonzero";
            r.elapsed_seconds = sw.seconds();
            return r;
        }
        if (!(*outcome.z < c.z_threshold)) {
            r.passed = false;
            r.first_failure_trial = trial;
            r.diagnostics = "updates on the exposed instance are systematically"
                            " slower (z=" + std::to_string(*outcome.z) +
                            " >= " + std::to_string(c.z_threshold) + ")";
            r.elapsed_seconds = sw.seconds();
            return r;
        }
        if (c.max_update_micros && outcome.trained_updates > 0) {
            const double mean_us = outcome.trained_seconds * 1e6 /
                                   static_cast<double>(outcome.trained_updates);
            if (mean_us > *c.max_update_micros) {
                r.passed = false;
                r.first_failure_trial = trial;
                r.diagnostics = "mean update time " + std::to_string(mean_us) +
                                " us exceeds the configured ceiling of " +
                                std::to_string(*c.max_update_micros) + " us";
                r.elapsed_seconds = sw.seconds();
                return r;
            }
        }
    }
    r.passed = true;
    r.trials_run = c.simulated_infinity;
    r.elapsed_seconds = sw.seconds();
    return r;
}

}  // namespace axiobench
