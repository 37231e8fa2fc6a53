#include <axiobench/axiobench.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{
        "Twelve-test benchmarking harness for online binary-sequence predictors"};

    std::string model_name;
    std::string mode = "full";
    std::string early_exit = "off";
    std::string report_path;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> trials;
    std::optional<std::size_t> input_bits;
    std::optional<std::size_t> period;
    std::optional<std::uint64_t> rho;
    bool list_models = false;
    bool skip_timing = false;

    app.add_option("--model", model_name,
                   "Model to evaluate (names via --list-models)");
    app.add_option("--seed", seed, "Master seed (default 0)");
    app.add_option("--mode", mode, "full or smoke (smoke: 100 trials)")
        ->check(CLI::IsMember({"full", "smoke"}));
    app.add_option("--trials", trials,
                   "Override the trial count of every test uniformly");
    app.add_option("--input-bits", input_bits, "Input width in bits");
    app.add_option("--period", period, "Pattern period");
    app.add_option("--rho", rho, "Prefix-to-target length ratio");
    app.add_option("--report", report_path, "Write the JSON report to this path");
    app.add_option("--early-exit", early_exit,
                   "on: stop at the first failing test (default off)")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_flag("--list-models", list_models, "List runnable model names");
    app.add_flag("--skip-timing", skip_timing,
                 "Skip the liveness test (test 12); the report marks it "
                 "skipped and the overall verdict is a fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    axiobench::register_builtin_models();
    auto& registry = axiobench::ModelRegistry::instance();

    if (list_models) {
        for (const std::string& name : registry.names())
            std::cout << name << "\n";
        return 0;
    }
    if (model_name.empty()) {
        std::cerr << "error: --model is required (names via --list-models)\n";
        return 2;
    }

    axiobench::TestConfig config;
    config.master_seed = seed;
    if (mode == "smoke")
        config.simulated_infinity = 100;
    if (trials)
        config.simulated_infinity = *trials;
    if (input_bits)
        config.input_size = *input_bits;
    if (period)
        config.pattern_period = *period;
    if (rho)
        config.rho = *rho;
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const auto factory = registry.build(model_name, config.input_size);
    if (!factory) {
        std::cerr << "error: unknown model '" << model_name
                  << "' (names via --list-models)\n";
        return 2;
    }

    axiobench::RunOptions options;
    options.early_exit = (early_exit == "on");
    options.skip_timing = skip_timing;

    axiobench::Report report;
    try {
        report = axiobench::run_all(*factory, config, options);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << axiobench::format_summary(report);

    if (!report_path.empty()) {
        const nlohmann::json j = report;
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report to '" << report_path << "'\n";
            return 2;
        }
        out << j.dump(2) << "\n";
    }

    if (report.status == "incompatible")
        return 3;
    return report.passed ? 0 : 1;
}
