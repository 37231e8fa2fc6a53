#pragma once

#include "axioms.hpp"
#include "config.hpp"
#include "model.hpp"
#include "report.hpp"
#include "timing.hpp"

#include <array>
#include <string>
#include <utility>

namespace axiobench {

struct RunOptions {
    bool early_exit = false;
    bool skip_timing = false;
    unsigned threads = 0;  // 0: use harness_threads()
};

namespace detail {

inline TestResult skipped_result(int axiom_id, std::string reason) {
    TestResult r;
    r.axiom_id = axiom_id;
    r.name = test_name(axiom_id);
    r.passed = false;
    r.skipped = true;
    r.diagnostics = std::move(reason);
    return r;
}

}  // namespace detail

// Runs tests 1-12 in axiom order. The verdict is all-or-nothing: overall
// passed only when every test ran and passed. A model that cannot satisfy
// the harness contract (detected by a pre-flight probe or by an abort inside
// a test) yields status "incompatible" with the remaining tests skipped.
inline Report run_all(const ModelFactory& f, const TestConfig& c,
                      const RunOptions& opt = {}) {
    c.validate();
    Report rep;
    rep.model = f.name();
    rep.config = c;
    rep.early_exit = opt.early_exit;
    rep.skip_timing = opt.skip_timing;
    const unsigned threads = opt.threads ? opt.threads : harness_threads();
    rep.environment.threads = threads;
    rep.environment.clock_resolution_ns = measure_clock_resolution_ns();

    bool incompatible = false;
    std::string incompatibility;
    try {
        auto probe = f.blank();
        (void)probe->fingerprint();
        const Input p = probe->predict();
        if (p.width() != c.input_size)
            throw HarnessIncompatibility(
                "prediction width " + std::to_string(p.width()) +
                " does not match configured input size " +
                std::to_string(c.input_size));
        probe->update(Input(c.input_size));
        auto copy = probe->clone();
        (void)copy->fingerprint();
    } catch (const HarnessIncompatibility& e) {
        incompatible = true;
        incompatibility = e.what();
    }

    using TestFn = TestResult (*)(const ModelFactory&, const TestConfig&, unsigned);
    constexpr std::array<TestFn, 12> tests = {
        &test_01_uninformed_start,    &test_02_determinism,
        &test_03_trace,               &test_04_input_order,
        &test_05_refractory_admissibility, &test_06_saturation,
        &test_07_temporal_adaptability,    &test_08_content_sensitivity,
        &test_09_context_sensitivity, &test_10_denoising,
        &test_11_generalisation,      &test_12_liveness};

    bool failure_seen = false;
    for (int id = 1; id <= 12; ++id) {
        if (incompatible) {
            rep.tests.push_back(detail::skipped_result(
                id, "model incompatible with the harness: " + incompatibility));
            continue;
        }
        if (opt.early_exit && failure_seen) {
            rep.tests.push_back(
                detail::skipped_result(id, "skipped after earlier failure"));
            continue;
        }
        if (id == 12 && opt.skip_timing) {
            rep.tests.push_back(
                detail::skipped_result(id, "timing test skipped by request"));
            continue;
        }
        try {
            TestResult t = tests[static_cast<std::size_t>(id - 1)](f, c, threads);
            failure_seen = failure_seen || !t.passed;
            rep.tests.push_back(std::move(t));
        } catch (const HarnessIncompatibility& e) {
            incompatible = true;
            incompatibility = e.what();
            rep.tests.push_back(detail::skipped_result(
                id, "aborted, model incompatible with the harness: " +
                        incompatibility));
        }
    }

    if (incompatible)
        rep.status = "incompatible";
    rep.passed = !incompatible;
    for (const TestResult& t : rep.tests)
        if (t.skipped || !t.passed)
            rep.passed = false;
    return rep;
}

}  // namespace axiobench
