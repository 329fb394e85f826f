#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "surfmc/analysis.hpp"
#include "surfmc/hamiltonian.hpp"
#include "surfmc/lattice.hpp"
#include "surfmc/sampler.hpp"

namespace surfmc {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitCapabilityError = 3;

// Declarative run description (one JSON file), validated before any run.
struct RunConfig {
    std::vector<int> lattice_sizes;
    std::vector<double> betas;
    CouplingSet couplings;
    SyndromeSpec syndrome;

    int64_t sweeps = 0;
    int64_t burn_in = 0;  // default: max(sweeps/10, 1000)
    uint64_t seed = 1;
    int n_chains = 1;
    int64_t measure_every = 1;
    bool random_order = false;

    std::string output_dir = "out";
    std::vector<int64_t> checkpoints;  // `syndrome` command sweep budgets

    ExponentMode x_mode = ExponentMode::Fixed;  // `scaling` command
    double fixed_x = -1.0;
    int peak_window = 3;
};

struct CliOverrides {
    std::optional<uint64_t> seed;
    std::optional<std::string> out_dir;
    int threads = 0;  // 0 = hardware concurrency
};

// Parses and validates; throws std::invalid_argument on bad configs.
RunConfig parse_config(const nlohmann::json& j, const CliOverrides& overrides = {});
RunConfig load_config(const std::string& path, const CliOverrides& overrides = {});

// Normalized config (defaults materialized) as stored in the manifest;
// feeding it back through parse_config reproduces the run exactly.
nlohmann::json config_echo(const RunConfig& cfg);

// Deterministic per-point seed derived from the master seed.
uint64_t seed_for_point(uint64_t master_seed, size_t point_index);

// Subcommand drivers. Return a process exit code; never throw.
int cmd_sweep(const RunConfig& cfg, int threads);
int cmd_scaling(const RunConfig& cfg, int threads);
int cmd_syndrome(const RunConfig& cfg, int threads);
int cmd_oracle(const RunConfig& cfg);

}  // namespace surfmc
