#include "surfmc/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "surfmc/errors.hpp"

namespace surfmc {

double neighbor_distance(int m) {
    if (m < 1 || m > kMaxNeighborOrder)
        throw CapabilityError("neighbor order " + std::to_string(m) + " outside supported range 1.." +
                              std::to_string(kMaxNeighborOrder));
    return std::sqrt(kNeighborDistSqDoubled[m - 1] / 4.0);
}

CouplingSet CouplingSet::from_values(const std::vector<double>& values) {
    if (values.size() > static_cast<size_t>(kMaxNeighborOrder))
        throw CapabilityError("at most " + std::to_string(kMaxNeighborOrder) +
                              " neighbor orders supported, got " + std::to_string(values.size()));
    CouplingSet c;
    std::copy(values.begin(), values.end(), c.J.begin());
    return c;
}

NeighborTable neighbor_table(const LatticeGeometry& geom, const CouplingSet& couplings) {
    NeighborTable t;
    t.geom = &geom;
    t.J = couplings.J;

    // Doubled-coordinate offsets per neighbor order.
    static const std::vector<std::array<int, 2>> stencil[kMaxNeighborOrder] = {
        {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}},                          // d^2 = 1/2
        {{2, 0}, {-2, 0}, {0, 2}, {0, -2}},                            // d^2 = 1
        {{2, 2}, {2, -2}, {-2, 2}, {-2, -2}},                          // d^2 = 2
        {{3, 1}, {3, -1}, {-3, 1}, {-3, -1}, {1, 3}, {-1, 3}, {1, -3}, {-1, -3}},  // d^2 = 5/2
    };

    const int n = geom.num_qubits();
    std::vector<std::vector<std::pair<int32_t, double>>> adj(n);
    for (int m = 0; m < kMaxNeighborOrder; ++m) {
        if (couplings.J[m] == 0.0) continue;
        for (const auto& q : geom.qubits) {
            for (const auto& d : stencil[m]) {
                int32_t other = geom.qubit_at(q.cx + d[0], q.cy + d[1]);
                if (other < 0) continue;
                adj[q.index].push_back({other, couplings.J[m]});
                if (other > q.index) t.pairs[m].push_back({q.index, other});
            }
        }
    }

    t.adj_offset.resize(n + 1);
    t.adj_offset[0] = 0;
    for (int q = 0; q < n; ++q)
        t.adj_offset[q + 1] = t.adj_offset[q] + static_cast<int32_t>(adj[q].size());
    t.adj_qubit.reserve(t.adj_offset[n]);
    t.adj_coupling.reserve(t.adj_offset[n]);
    for (int q = 0; q < n; ++q)
        for (const auto& [other, j] : adj[q]) {
            t.adj_qubit.push_back(other);
            t.adj_coupling.push_back(j);
        }
    return t;
}

double ohmic_beta(const OhmicParameters& p) {
    const double ratio = p.lambda / p.omega0;
    return ratio * ratio / (2.0 * std::numbers::pi);
}

std::complex<double> ohmic_coupling(double r, const OhmicParameters& p) {
    if (r <= 0.0) throw std::invalid_argument("ohmic_coupling: r must be positive");
    const double range = p.v * p.delta;
    if (r < range) return {0.5 * std::acosh(range / r), std::numbers::pi / 4.0};
    return {0.0, 0.5 * std::asin(range / r)};
}

CouplingSet couplings_from_ohmic(const OhmicParameters& p, int M) {
    if (M < 1 || M > kMaxNeighborOrder)
        throw CapabilityError("couplings_from_ohmic: M outside supported range 1.." +
                              std::to_string(kMaxNeighborOrder));
    CouplingSet c;
    for (int m = 1; m <= M; ++m) c.J[m - 1] = ohmic_coupling(neighbor_distance(m), p).real();
    return c;
}

double total_energy(std::span<const int8_t> spins, const NeighborTable& table) {
    double e = 0.0;
    for (int m = 0; m < kMaxNeighborOrder; ++m) {
        if (table.J[m] == 0.0) continue;
        double sum = 0.0;
        for (const auto& pr : table.pairs[m]) sum += spins[pr[0]] * spins[pr[1]];
        e -= table.J[m] * sum;
    }
    return e;
}

double delta_energy(std::span<const int8_t> spins, std::span<const int32_t> flip_set,
                    const NeighborTable& table) {
    auto in_set = [&flip_set](int32_t q) {
        for (int32_t f : flip_set)
            if (f == q) return true;
        return false;
    };
    double de = 0.0;
    for (int32_t q : flip_set) {
        for (int32_t k = table.adj_offset[q]; k < table.adj_offset[q + 1]; ++k) {
            const int32_t other = table.adj_qubit[k];
            if (in_set(other)) continue;  // interior pair, unchanged
            de += 2.0 * table.adj_coupling[k] * spins[q] * spins[other];
        }
    }
    return de;
}

}  // namespace surfmc
