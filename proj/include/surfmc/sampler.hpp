#pragma once

#include <cstdint>
#include <random>

#include "surfmc/hamiltonian.hpp"
#include "surfmc/lattice.hpp"
#include "surfmc/state.hpp"
#include "surfmc/stats.hpp"

namespace surfmc {

// Deterministic 64-bit generator: mt19937_64 seeded through splitmix64 so
// that nearby stream ids (seed xor chain index) decorrelate. The algorithm
// name recorded in run manifests is "splitmix64+mt19937_64".
class Rng {
public:
    explicit Rng(uint64_t stream);
    uint64_t next_u64() { return gen_(); }
    // Uniform in [0, 1), 53-bit mantissa.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
    int uniform_int(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }

private:
    std::mt19937_64 gen_;
};

inline constexpr const char* kRngName = "splitmix64+mt19937_64";

struct SamplerConfig {
    double beta = 0.0;
    int64_t sweeps = 0;        // measurement sweeps
    int64_t burn_in = 0;       // discarded sweeps
    uint64_t seed = 0;
    int n_chains = 1;
    int64_t measure_every = 1;
    bool random_order = false;  // random-scan plaquette updates (cross-check mode)
};

struct SweepCounts {
    int64_t plaquette_attempts = 0;
    int64_t plaquette_accepts = 0;
    int64_t line_attempts = 0;
    int64_t line_accepts = 0;
};

// Single Metropolis attempt, accepted with probability min(1, e^{-beta dE}).
bool attempt_plaquette(SpinConfiguration& config, int32_t p, const NeighborTable& table,
                       double beta, Rng& rng);
bool attempt_line(SpinConfiguration& config, int row, const NeighborTable& table, double beta,
                  Rng& rng);

// One sweep: a Metropolis attempt per plaquette in fixed index order (or
// random-scan when configured) plus one line attempt on a uniform random
// row. The configuration stays on the star-constraint manifold.
SweepCounts sweep(SpinConfiguration& config, const NeighborTable& table, double beta, Rng& rng);

// One chain from the vacuum: burn_in unmeasured sweeps, then cfg.sweeps
// sweeps recording c, S, S*c, E, E^2 and the central spin every
// measure_every sweeps. The RNG stream is cfg.seed xor chain_index.
Accumulator run_single_chain(const LatticeGeometry& geom, const NeighborTable& table,
                             const CouplingSet& couplings, const SyndromeString& syndrome,
                             const SamplerConfig& cfg, int chain_index);

// All cfg.n_chains chains, merged in chain order.
Accumulator run_chain(const LatticeGeometry& geom, const NeighborTable& table,
                      const CouplingSet& couplings, const SyndromeString& syndrome,
                      const SamplerConfig& cfg);

// Descriptor used in accumulator provenance and CSV ("none", "one:x:y",
// "two:x1:y1:x2:y2").
std::string syndrome_descriptor(const SyndromeSpec& spec);

}  // namespace surfmc
