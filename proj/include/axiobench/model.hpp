#pragma once

#include "signals.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace axiobench {

// Thrown when a model cannot satisfy the harness contract (e.g. unusable
// clone or fingerprint support). The runner reports the model as
// incompatible instead of scoring it.
class HarnessIncompatibility : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Model-author-supplied, equality-comparable configuration summary. Two
// instances with equal fingerprints are promised to realise the same
// configuration.
class Fingerprint {
public:
    Fingerprint() = default;
    explicit Fingerprint(std::string value) : value_(std::move(value)) {}

    const std::string& value() const { return value_; }

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

private:
    std::string value_;
};

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const {
        return std::hash<std::string>{}(f.value());
    }
};

// Online binary sequence predictor under test. predict() must be const and
// stable between updates; update() consumes exactly one input.
class Model {
public:
    virtual ~Model() = default;

    virtual Input predict() const = 0;
    virtual void update(const Input& x) = 0;
    virtual Fingerprint fingerprint() const = 0;
    virtual std::unique_ptr<Model> clone() const = 0;
};

class ModelFactory {
public:
    virtual ~ModelFactory() = default;

    // A fresh instance carrying no environment-specific knowledge. Blanks of
    // one factory share a fingerprint.
    virtual std::unique_ptr<Model> blank() const = 0;

    virtual std::string name() const = 0;
};

inline void feed(Model& m, const Sequence& s) {
    for (const Input& x : s.items)
        m.update(x);
}

// Rolls the model forward, feeding each prediction back as the next input.
inline Sequence autoregress(Model& m, std::size_t steps) {
    Sequence out;
    out.items.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        Input p = m.predict();
        m.update(p);
        out.items.push_back(std::move(p));
    }
    return out;
}

struct LearnOutcome {
    bool learned = false;
    // Update steps consumed through the first all-correct pass: |phi| * passes.
    std::optional<std::uint64_t> tau;
    std::uint64_t passes = 0;
};

// Teaches phi by repeated teacher-forced passes. A pass in which every
// prediction was correct means the model reproduces phi on its own from the
// pass's start, so it counts as learned.
//
// A pass that starts from an already-seen fingerprint is a state cycle: the
// trajectory from here repeats an earlier (failed) pass exactly, so the
// loop bails out instead of burning the rest of the budget.
inline LearnOutcome learn(Model& m, const Sequence& phi, std::uint64_t max_passes) {
    if (phi.empty())
        throw std::invalid_argument("learn: empty sequence");
    std::unordered_set<Fingerprint, FingerprintHash> seen;
    LearnOutcome out;
    for (std::uint64_t pass = 1; pass <= max_passes; ++pass) {
        if (!seen.insert(m.fingerprint()).second)
            return out;
        bool all_correct = true;
        for (const Input& x : phi.items) {
            if (!(m.predict() == x))
                all_correct = false;
            m.update(x);
        }
        out.passes = pass;
        if (all_correct) {
            out.learned = true;
            out.tau = static_cast<std::uint64_t>(phi.size()) * pass;
            return out;
        }
    }
    return out;
}

}  // namespace axiobench
