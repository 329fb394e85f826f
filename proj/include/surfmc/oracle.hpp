#pragma once

#include <cstdint>

#include "surfmc/hamiltonian.hpp"
#include "surfmc/lattice.hpp"

namespace surfmc {

// Enumeration bound: number of free bits L(L-1) + 1 must not exceed this.
inline constexpr int kMaxEnumerationBits = 24;

// Exact Boltzmann averages over every restricted state, split into the two
// logical classes.
struct ExactResult {
    int64_t n_states = 0;
    double z_class_i = 0.0;   // relative weights, normalized by the vacuum
    double z_class_ii = 0.0;
    double mean_class = 0.0;          // <c>
    double mean_string = 0.0;         // <S>
    double mean_string_class = 0.0;   // <S c>
    double mean_energy = 0.0;         // <E>
    double mean_energy_sq = 0.0;      // <E^2>
    double heat_capacity = 0.0;       // beta^2 (<E^2> - <E>^2) / N
    double ratio_ba = 0.0;            // |<S c> / <S>| (NaN when <S> = 0)
    double fidelity = 0.0;            // 1 / sqrt(1 + ratio^2)
};

// Exhaustive sum over all 2^(L(L-1)+1) restricted states: plaquette subsets
// in Gray-code order (O(1) incremental flips) for each of the two classes.
// Throws CapabilityError when the bound is exceeded.
ExactResult enumerate_exact(const LatticeGeometry& geom, const NeighborTable& table, double beta,
                            const SyndromeString& syndrome);

}  // namespace surfmc
