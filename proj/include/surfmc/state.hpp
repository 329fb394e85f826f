#pragma once

#include <cstdint>
#include <vector>

#include "surfmc/hamiltonian.hpp"
#include "surfmc/lattice.hpp"

namespace surfmc {

// One restricted state |s*>: sigma^x eigenvalues (+-1) per qubit, with every
// star parity +1. Configurations are generated from the all-plus vacuum by
// plaquette flips (class-preserving) and logical-Z line flips (class-
// toggling), so the star constraints hold by construction. The energy and
// the logical-X eigenvalue (class label) are cached and updated per move.
// Owned by exactly one chain; never shared mutably.
struct SpinConfiguration {
    std::vector<int8_t> spins;
    double energy = 0.0;
    int8_t class_label = 1;
};

// All-plus vacuum: class +1, energy -sum_m J_m * (m-pair count).
SpinConfiguration vacuum(const LatticeGeometry& geom, const NeighborTable& table);

// Negate the 3-4 qubits of plaquette p; returns the energy delta (also
// applied to the cached energy). Class label is unchanged.
double flip_plaquette(SpinConfiguration& config, int32_t p, const NeighborTable& table);

// Negate the L qubits of logical_z_rows[row]; toggles the class label.
// Returns the applied energy delta.
double flip_line(SpinConfiguration& config, int row, const NeighborTable& table);

// Product of spins along the string (the eigenvalue S_{s*} of the string
// operator). Empty string -> +1.
int string_value(const SpinConfiguration& config, const SyndromeString& string);

// True iff every star parity is +1.
bool validate_stars(const SpinConfiguration& config, const LatticeGeometry& geom);

// Product of spins along logical_x_columns[column]; equals class_label on
// any valid configuration regardless of the column chosen.
int class_from_column(const SpinConfiguration& config, const LatticeGeometry& geom, int column);

inline double total_energy(const SpinConfiguration& config, const NeighborTable& table) {
    return total_energy(std::span<const int8_t>(config.spins), table);
}

}  // namespace surfmc
