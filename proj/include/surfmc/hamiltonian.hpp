#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "surfmc/lattice.hpp"

namespace surfmc {

// Neighbor orders supported by the coupling model. Order m ranks the
// distinct Euclidean distances between link midpoints: squared distances
// 1/2, 1, 2, 5/2 for m = 1..4 (doubled-coordinate squared distances
// 2, 4, 8, 10). Extending beyond 4 means adding stencils below.
inline constexpr int kMaxNeighborOrder = 4;
inline constexpr std::array<int, 4> kNeighborDistSqDoubled = {2, 4, 8, 10};

// Distance of the m-th neighbor pair in lattice units (lattice constant 1).
double neighbor_distance(int m);

// Exchange couplings J_m by neighbor order, J[0] = nearest neighbor.
struct CouplingSet {
    std::array<double, kMaxNeighborOrder> J{};

    static CouplingSet nearest(double j1) {
        CouplingSet c;
        c.J[0] = j1;
        return c;
    }
    // Throws CapabilityError if more than kMaxNeighborOrder values are given.
    static CouplingSet from_values(const std::vector<double>& values);
};

// Physical parameters of the Ohmic bath: coupling strength lambda,
// characteristic boson frequency omega0, mode velocity v, and the error
// correction cycle duration delta.
struct OhmicParameters {
    double lambda = 0.0;
    double omega0 = 1.0;
    double v = 1.0;
    double delta = 1.0;
};

// Interacting pairs induced by a CouplingSet on a geometry. Pairs are
// grouped by neighbor order; orders with J_m = 0 are omitted. The flat
// adjacency (CSR) carries the coupling per entry for O(1) delta-energy
// evaluation. Immutable after construction.
struct NeighborTable {
    const LatticeGeometry* geom = nullptr;
    std::array<double, kMaxNeighborOrder> J{};
    std::array<std::vector<std::array<int32_t, 2>>, kMaxNeighborOrder> pairs;

    std::vector<int32_t> adj_offset;  // size N+1
    std::vector<int32_t> adj_qubit;
    std::vector<double> adj_coupling;

    size_t pair_count(int m) const { return pairs.at(m - 1).size(); }
};

NeighborTable neighbor_table(const LatticeGeometry& geom, const CouplingSet& couplings);

// beta = (1/2pi) (lambda/omega0)^2 for the Ohmic bath.
double ohmic_beta(const OhmicParameters& p);

// Bath-induced exchange coupling at distance r:
//   J = 1/2 [arcosh(v*delta/r) + i*pi/2]   for r < v*delta
//   J = (i/2) arcsin(v*delta/r)            for r > v*delta
// Both branches give i*pi/4 at r = v*delta. Throws on r <= 0.
std::complex<double> ohmic_coupling(double r, const OhmicParameters& p);

// Real-truncated couplings J_m = Re J(d_m) for the first M neighbor orders;
// the real part vanishes for d_m >= v*delta.
CouplingSet couplings_from_ohmic(const OhmicParameters& p, int M);

// E = -sum_(ij) J_ij s_i s_j over unordered pairs.
double total_energy(std::span<const int8_t> spins, const NeighborTable& table);

// E(after) - E(before) for flipping flip_set, computed from pairs with
// exactly one endpoint in the set. Does not mutate.
double delta_energy(std::span<const int8_t> spins, std::span<const int32_t> flip_set,
                    const NeighborTable& table);

}  // namespace surfmc
