#include "surfmc/state.hpp"

#include <cstdlib>
#include <stdexcept>

namespace surfmc {

SpinConfiguration vacuum(const LatticeGeometry& geom, const NeighborTable& table) {
    SpinConfiguration c;
    c.spins.assign(geom.num_qubits(), 1);
    c.class_label = 1;
    c.energy = total_energy(c, table);
    return c;
}

namespace {

// Delta for flipping the qubits of plaquette p, membership-tested via the
// doubled coords: q belongs to p iff |qx-px| + |qy-py| == 1.
double plaquette_delta(const SpinConfiguration& config, int32_t p, const NeighborTable& table) {
    const LatticeGeometry& geom = *table.geom;
    const auto [px, py] = geom.plaquette_coord[p];
    double de = 0.0;
    for (int32_t q : geom.plaquettes[p]) {
        const double sq = config.spins[q];
        for (int32_t k = table.adj_offset[q]; k < table.adj_offset[q + 1]; ++k) {
            const int32_t other = table.adj_qubit[k];
            const QubitId& o = geom.qubits[other];
            if (std::abs(o.cx - px) + std::abs(o.cy - py) == 1) continue;
            de += table.adj_coupling[k] * sq * config.spins[other];
        }
    }
    return 2.0 * de;
}

// Delta for flipping logical_z_rows[row]: only horizontal qubits have even
// cy, so membership reduces to cy == 2*row.
double line_delta(const SpinConfiguration& config, int row, const NeighborTable& table) {
    const LatticeGeometry& geom = *table.geom;
    const int cy = 2 * row;
    double de = 0.0;
    for (int32_t q : geom.logical_z_rows[row]) {
        const double sq = config.spins[q];
        for (int32_t k = table.adj_offset[q]; k < table.adj_offset[q + 1]; ++k) {
            const int32_t other = table.adj_qubit[k];
            if (geom.qubits[other].cy == cy) continue;
            de += table.adj_coupling[k] * sq * config.spins[other];
        }
    }
    return 2.0 * de;
}

}  // namespace

double flip_plaquette(SpinConfiguration& config, int32_t p, const NeighborTable& table) {
    const double de = plaquette_delta(config, p, table);
    for (int32_t q : table.geom->plaquettes[p]) config.spins[q] = -config.spins[q];
    config.energy += de;
    return de;
}

double flip_line(SpinConfiguration& config, int row, const NeighborTable& table) {
    const LatticeGeometry& geom = *table.geom;
    if (row < 0 || row >= geom.L) throw std::invalid_argument("flip_line: row out of range");
    const double de = line_delta(config, row, table);
    for (int32_t q : geom.logical_z_rows[row]) config.spins[q] = -config.spins[q];
    config.energy += de;
    config.class_label = -config.class_label;
    return de;
}

int string_value(const SpinConfiguration& config, const SyndromeString& string) {
    int s = 1;
    for (int32_t q : string.qubits) s *= config.spins[q];
    return s;
}

bool validate_stars(const SpinConfiguration& config, const LatticeGeometry& geom) {
    for (const auto& star : geom.stars) {
        int p = 1;
        for (int32_t q : star) p *= config.spins[q];
        if (p != 1) return false;
    }
    return true;
}

int class_from_column(const SpinConfiguration& config, const LatticeGeometry& geom, int column) {
    int c = 1;
    for (int32_t q : geom.logical_x_columns.at(column)) c *= config.spins[q];
    return c;
}

}  // namespace surfmc
