#pragma once

#include "axioms.hpp"
#include "config.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace axiobench {

struct EnvironmentInfo {
    std::uint64_t clock_resolution_ns = 0;
    unsigned threads = 1;
    std::string notes;

    bool operator==(const EnvironmentInfo&) const = default;
};

// Smallest observable tick of the monotonic clock, estimated at startup.
inline std::uint64_t measure_clock_resolution_ns() {
    using clock = std::chrono::steady_clock;
    std::uint64_t best = UINT64_MAX;
    for (int i = 0; i < 64; ++i) {
        const auto t0 = clock::now();
        auto t1 = clock::now();
        while (t1 == t0)
            t1 = clock::now();
        const auto d = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        if (d < best)
            best = d;
    }
    return best == UINT64_MAX ? 0 : best;
}

// Full record of one harness run: configuration echo, per-test outcomes in
// axiom order, and the all-or-nothing verdict. The config echo reproduces
// every non-timing verdict exactly.
struct Report {
    int schema_version = 1;
    std::string model;
    std::string status = "ok";  // "ok" or "incompatible"
    TestConfig config;
    bool early_exit = false;
    bool skip_timing = false;
    std::vector<TestResult> tests;
    bool passed = false;
    EnvironmentInfo environment;

    bool operator==(const Report&) const = default;
};

inline bool operator==(const TestResult& a, const TestResult& b) {
    return a.axiom_id == b.axiom_id && a.name == b.name && a.passed == b.passed &&
           a.skipped == b.skipped && a.trials_run == b.trials_run &&
           a.first_failure_trial == b.first_failure_trial &&
           a.diagnostics == b.diagnostics && a.elapsed_seconds == b.elapsed_seconds;
}

inline void to_json(nlohmann::json& j, const EnvironmentInfo& e) {
    j = nlohmann::json{{"clock_resolution_ns", e.clock_resolution_ns},
                       {"threads", e.threads},
                       {"notes", e.notes}};
}

inline void from_json(const nlohmann::json& j, EnvironmentInfo& e) {
    j.at("clock_resolution_ns").get_to(e.clock_resolution_ns);
    j.at("threads").get_to(e.threads);
    j.at("notes").get_to(e.notes);
}

inline void to_json(nlohmann::json& j, const TestConfig& c) {
    j = nlohmann::json{{"input_size", c.input_size},
                       {"pattern_period", c.pattern_period},
                       {"simulated_infinity", c.simulated_infinity},
                       {"runs_per_trial", c.runs_per_trial},
                       {"rho", c.rho},
                       {"timing_resolution_floor_us", c.timing_resolution_floor_us},
                       {"batches_per_timing_trial", c.batches_per_timing_trial},
                       {"structured_input_fraction", c.structured_input_fraction},
                       {"z_threshold", c.z_threshold},
                       {"master_seed", c.master_seed}};
    if (c.max_update_micros)
        j["max_update_micros"] = *c.max_update_micros;
    else
        j["max_update_micros"] = nullptr;
}

inline void from_json(const nlohmann::json& j, TestConfig& c) {
    j.at("input_size").get_to(c.input_size);
    j.at("pattern_period").get_to(c.pattern_period);
    j.at("simulated_infinity").get_to(c.simulated_infinity);
    j.at("runs_per_trial").get_to(c.runs_per_trial);
    j.at("rho").get_to(c.rho);
    j.at("timing_resolution_floor_us").get_to(c.timing_resolution_floor_us);
    j.at("batches_per_timing_trial").get_to(c.batches_per_timing_trial);
    j.at("structured_input_fraction").get_to(c.structured_input_fraction);
    j.at("z_threshold").get_to(c.z_threshold);
    j.at("master_seed").get_to(c.master_seed);
    if (j.contains("max_update_micros") && !j.at("max_update_micros").is_null())
        c.max_update_micros = j.at("max_update_micros").get<double>();
    else
        c.max_update_micros.reset();
}

inline void to_json(nlohmann::json& j, const TestResult& r) {
    j = nlohmann::json{{"axiom_id", r.axiom_id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"skipped", r.skipped},
                       {"trials_run", r.trials_run},
                       {"diagnostics", r.diagnostics},
                       {"elapsed_seconds", r.elapsed_seconds}};
    if (r.first_failure_trial)
        j["first_failure_trial"] = *r.first_failure_trial;
    else
        j["first_failure_trial"] = nullptr;
}

inline void from_json(const nlohmann::json& j, TestResult& r) {
    j.at("axiom_id").get_to(r.axiom_id);
    j.at("name").get_to(r.name);
    j.at("passed").get_to(r.passed);
    j.at("skipped").get_to(r.skipped);
    j.at("trials_run").get_to(r.trials_run);
    j.at("diagnostics").get_to(r.diagnostics);
    j.at("elapsed_seconds").get_to(r.elapsed_seconds);
    if (j.contains("first_failure_trial") && !j.at("first_failure_trial").is_null())
        r.first_failure_trial = j.at("first_failure_trial").get<std::uint64_t>();
    else
        r.first_failure_trial.reset();
}

inline void to_json(nlohmann::json& j, const Report& r) {
    j = nlohmann::json{{"schema_version", r.schema_version},
                       {"model", r.model},
                       {"status", r.status},
                       {"master_seed", r.config.master_seed},
                       {"config", r.config},
                       {"early_exit", r.early_exit},
                       {"skip_timing", r.skip_timing},
                       {"tests", r.tests},
                       {"passed", r.passed},
                       {"environment", r.environment}};
}

inline void from_json(const nlohmann::json& j, Report& r) {
    j.at("schema_version").get_to(r.schema_version);
    j.at("model").get_to(r.model);
    j.at("status").get_to(r.status);
    j.at("config").get_to(r.config);
    j.at("early_exit").get_to(r.early_exit);
    j.at("skip_timing").get_to(r.skip_timing);
    j.at("tests").get_to(r.tests);
    j.at("passed").get_to(r.passed);
    j.at("environment").get_to(r.environment);
}

// One line per test in axiom order, then the verdict — layout is stable so
// downstream diffs stay meaningful.
inline std::string format_summary(const Report& r) {
    std::string out;
    out += "model: " + r.model + "   seed: " +
           std::to_string(r.config.master_seed) + "   trials: " +
           std::to_string(r.config.simulated_infinity) + "\n";
    for (const TestResult& t : r.tests) {
        char line[160];
        const char* verdict = t.skipped ? "skip" : (t.passed ? "pass" : "FAIL");
        std::snprintf(line, sizeof(line), "%2d %-24s %-4s", t.axiom_id,
                      t.name.c_str(), verdict);
        out += line;
        if (!t.skipped) {
            std::snprintf(line, sizeof(line), "  (%llu trials, %.3f s)",
                          static_cast<unsigned long long>(t.trials_run),
                          t.elapsed_seconds);
            out += line;
        }
        if (!t.passed && !t.diagnostics.empty())
            out += "  " + t.diagnostics;
        out += "\n";
    }
    if (r.status != "ok")
        out += "status: " + r.status + "\n";
    out += std::string("overall: ") + (r.passed ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace axiobench
