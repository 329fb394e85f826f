#include "surfmc/sampler.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace surfmc {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace

Rng::Rng(uint64_t stream) : gen_(splitmix64(stream)) {}

bool attempt_plaquette(SpinConfiguration& config, int32_t p, const NeighborTable& table,
                       double beta, Rng& rng) {
    const double de = delta_energy(std::span<const int8_t>(config.spins),
                                   std::span<const int32_t>(table.geom->plaquettes[p]), table);
    if (de <= 0.0 || rng.uniform() < std::exp(-beta * de)) {
        for (int32_t q : table.geom->plaquettes[p]) config.spins[q] = -config.spins[q];
        config.energy += de;
        return true;
    }
    return false;
}

bool attempt_line(SpinConfiguration& config, int row, const NeighborTable& table, double beta,
                  Rng& rng) {
    const LatticeGeometry& geom = *table.geom;
    const double de = delta_energy(std::span<const int8_t>(config.spins),
                                   std::span<const int32_t>(geom.logical_z_rows[row]), table);
    if (de <= 0.0 || rng.uniform() < std::exp(-beta * de)) {
        for (int32_t q : geom.logical_z_rows[row]) config.spins[q] = -config.spins[q];
        config.energy += de;
        config.class_label = -config.class_label;
        return true;
    }
    return false;
}

SweepCounts sweep(SpinConfiguration& config, const NeighborTable& table, double beta, Rng& rng) {
    const int n_plaq = static_cast<int>(table.geom->plaquettes.size());
    SweepCounts counts;
    counts.plaquette_attempts = n_plaq;
    for (int32_t p = 0; p < n_plaq; ++p)
        if (attempt_plaquette(config, p, table, beta, rng)) ++counts.plaquette_accepts;
    counts.line_attempts = 1;
    const int row = rng.uniform_int(table.geom->L);
    if (attempt_line(config, row, table, beta, rng)) ++counts.line_accepts;
    return counts;
}

namespace {

SweepCounts sweep_random_scan(SpinConfiguration& config, const NeighborTable& table, double beta,
                              Rng& rng) {
    const int n_plaq = static_cast<int>(table.geom->plaquettes.size());
    SweepCounts counts;
    counts.plaquette_attempts = n_plaq;
    for (int k = 0; k < n_plaq; ++k) {
        const int32_t p = rng.uniform_int(n_plaq);
        if (attempt_plaquette(config, p, table, beta, rng)) ++counts.plaquette_accepts;
    }
    counts.line_attempts = 1;
    const int row = rng.uniform_int(table.geom->L);
    if (attempt_line(config, row, table, beta, rng)) ++counts.line_accepts;
    return counts;
}

}  // namespace

Accumulator run_single_chain(const LatticeGeometry& geom, const NeighborTable& table,
                             const CouplingSet& couplings, const SyndromeString& syndrome,
                             const SamplerConfig& cfg, int chain_index) {
    if (cfg.sweeps <= 0) throw std::invalid_argument("run_single_chain: sweeps must be positive");
    if (cfg.burn_in < 0) throw std::invalid_argument("run_single_chain: burn_in must be >= 0");
    if (cfg.measure_every < 1)
        throw std::invalid_argument("run_single_chain: measure_every must be >= 1");

    const int64_t n_samples = cfg.sweeps / cfg.measure_every;
    Accumulator acc(bin_size_for(n_samples));
    acc.L = geom.L;
    acc.beta = cfg.beta;
    acc.J = couplings.J;
    acc.sweeps = cfg.sweeps;
    acc.burn_in = cfg.burn_in;
    acc.seed = cfg.seed;
    acc.n_chains = 1;
    acc.measure_every = cfg.measure_every;

    Rng rng(cfg.seed ^ static_cast<uint64_t>(chain_index));
    SpinConfiguration config = vacuum(geom, table);
    const int32_t center = geom.central_qubit();

    auto do_sweep = [&]() {
        return cfg.random_order ? sweep_random_scan(config, table, cfg.beta, rng)
                                : sweep(config, table, cfg.beta, rng);
    };

    for (int64_t i = 0; i < cfg.burn_in; ++i) do_sweep();
    for (int64_t i = 1; i <= cfg.sweeps; ++i) {
        const SweepCounts c = do_sweep();
        acc.plaquette_attempts += c.plaquette_attempts;
        acc.plaquette_accepts += c.plaquette_accepts;
        acc.line_attempts += c.line_attempts;
        acc.line_accepts += c.line_accepts;
        if (i % cfg.measure_every == 0) {
            assert(validate_stars(config, geom));
            acc.record(config.class_label, string_value(config, syndrome), config.energy,
                       config.spins[center]);
        }
    }
    return acc;
}

Accumulator run_chain(const LatticeGeometry& geom, const NeighborTable& table,
                      const CouplingSet& couplings, const SyndromeString& syndrome,
                      const SamplerConfig& cfg) {
    if (cfg.n_chains < 1) throw std::invalid_argument("run_chain: n_chains must be >= 1");
    Accumulator merged = run_single_chain(geom, table, couplings, syndrome, cfg, 0);
    for (int c = 1; c < cfg.n_chains; ++c)
        merged.merge(run_single_chain(geom, table, couplings, syndrome, cfg, c));
    merged.n_chains = cfg.n_chains;
    return merged;
}

std::string syndrome_descriptor(const SyndromeSpec& spec) {
    if (spec.plaquettes.empty()) return "none";
    std::string s = spec.plaquettes.size() == 1 ? "one" : "two";
    for (const auto& p : spec.plaquettes)
        s += ":" + std::to_string(p[0]) + ":" + std::to_string(p[1]);
    return s;
}

}  // namespace surfmc
