// Plugging an external predictor into the harness: implement the model
// contract, register a factory under a name, run the suite, read the report.
//
// The model here is a per-channel first-order transition counter — simple
// enough to follow, and honestly deficient: expect it to fail several tests.

#include <axiobench/axiobench.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <utility>
#include <vector>

namespace {

using axiobench::Digest;
using axiobench::Fingerprint;
using axiobench::Input;
using axiobench::Model;

// For every channel, counts how often it fired after being off vs after being
// on, and predicts a spike only where firing is strictly the majority
// continuation of the current state.
class TransitionModel final : public Model {
public:
    explicit TransitionModel(std::size_t width) : width_(width), last_(width) {
        counts_.assign(width * 2, {0, 0});
        trail_.absorb(static_cast<std::uint64_t>(width));
    }

    Input predict() const override {
        Input out(width_);
        for (std::size_t i = 0; i < width_; ++i) {
            const auto& c = counts_[i * 2 + (last_.get(i) ? 1 : 0)];
            out.set(i, c.second > c.first);
        }
        return out;
    }

    void update(const Input& x) override {
        if (x.width() != width_)
            throw axiobench::HarnessIncompatibility(
                "transition model: input width mismatch");
        for (std::size_t i = 0; i < width_; ++i) {
            auto& c = counts_[i * 2 + (last_.get(i) ? 1 : 0)];
            (x.get(i) ? c.second : c.first) += 1;
        }
        trail_.absorb(x);
        last_ = x;
    }

    Fingerprint fingerprint() const override { return Fingerprint(trail_.hex()); }

    std::unique_ptr<Model> clone() const override {
        return std::make_unique<TransitionModel>(*this);
    }

private:
    std::size_t width_;
    Input last_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> counts_;
    Digest trail_;
};

}  // namespace

int main() {
    axiobench::register_builtin_models();
    auto& registry = axiobench::ModelRegistry::instance();
    registry.add("transition", [](std::size_t width) {
        return std::make_shared<axiobench::LambdaFactory>("transition", [width] {
            return std::make_unique<TransitionModel>(width);
        });
    });

    axiobench::TestConfig config;
    config.simulated_infinity = 100;  // demo scale
    config.master_seed = 1;

    const auto factory = registry.build("transition", config.input_size);

    axiobench::RunOptions options;
    options.skip_timing = true;  // timing needs a quiet machine; not a demo's job

    const axiobench::Report report = axiobench::run_all(*factory, config, options);
    std::cout << axiobench::format_summary(report);
    return report.passed ? 0 : 1;
}
