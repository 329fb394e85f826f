#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "surfmc/run.hpp"

int main(int argc, char** argv) {
    CLI::App app{"surfmc: Monte Carlo evaluation of surface-code fidelity under correlated errors"};
    app.require_subcommand(1);

    std::string config_path;
    surfmc::CliOverrides overrides;
    uint64_t seed_flag = 0;
    std::string out_dir_flag;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--seed", seed_flag, "override sampler.seed");
        sub->add_option("--out-dir", out_dir_flag, "override output_dir");
        sub->add_option("--threads", overrides.threads, "worker threads (0 = hardware)");
    };

    CLI::App* sweep = app.add_subcommand("sweep", "beta scan at fixed couplings and syndrome");
    CLI::App* scaling = app.add_subcommand("scaling", "heat-capacity peaks and beta_c fit");
    CLI::App* syndrome = app.add_subcommand("syndrome", "error-sector convergence series");
    CLI::App* oracle = app.add_subcommand("oracle", "exact enumeration for small lattices");
    for (CLI::App* sub : {sweep, scaling, syndrome, oracle}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    try {
        for (const CLI::App* sub : {sweep, scaling, syndrome, oracle}) {
            if (!sub->parsed()) continue;
            if (sub->count("--seed")) overrides.seed = seed_flag;
            if (sub->count("--out-dir")) overrides.out_dir = out_dir_flag;
        }
        const surfmc::RunConfig cfg = surfmc::load_config(config_path, overrides);
        if (sweep->parsed()) return surfmc::cmd_sweep(cfg, overrides.threads);
        if (scaling->parsed()) return surfmc::cmd_scaling(cfg, overrides.threads);
        if (syndrome->parsed()) return surfmc::cmd_syndrome(cfg, overrides.threads);
        if (oracle->parsed()) return surfmc::cmd_oracle(cfg);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return surfmc::kExitConfigError;
    } catch (const nlohmann::json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return surfmc::kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
