#include "surfmc/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace surfmc {

int32_t LatticeGeometry::qubit_at(int cx, int cy) const {
    if (cx < 0 || cy < 0 || cx >= coord_stride_ || cy >= coord_stride_) return -1;
    return coord_to_qubit_[static_cast<size_t>(cx) * coord_stride_ + cy];
}

int32_t LatticeGeometry::plaquette_index(int i, int j) const {
    if (i < 0 || i >= L || j < 0 || j >= L - 1) return -1;
    return static_cast<int32_t>(i * (L - 1) + j);
}

int32_t LatticeGeometry::central_qubit() const {
    return qubit_at(2 * (L / 2) + 1, 2 * (L / 2));
}

bool SyndromeString::contains(int32_t q) const {
    return std::binary_search(qubits.begin(), qubits.end(), q);
}

LatticeGeometry build_lattice(int L) {
    if (L < 2) throw std::invalid_argument("build_lattice: L must be >= 2, got " + std::to_string(L));

    LatticeGeometry g;
    g.L = L;
    g.n_star = L * (L - 1);
    g.coord_stride_ = 2 * L + 1;
    g.coord_to_qubit_.assign(static_cast<size_t>(g.coord_stride_) * g.coord_stride_, -1);

    auto add_qubit = [&g](int cx, int cy) {
        int32_t idx = static_cast<int32_t>(g.qubits.size());
        g.qubits.push_back({idx, cx, cy});
        g.coord_to_qubit_[static_cast<size_t>(cx) * g.coord_stride_ + cy] = idx;
    };

    // Horizontal qubits first (index i*L + j), then vertical.
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L; ++j) add_qubit(2 * i + 1, 2 * j);
    for (int i = 1; i < L; ++i)
        for (int j = 0; j < L - 1; ++j) add_qubit(2 * i, 2 * j + 1);

    // Incidence: the 3-4 qubits at doubled Manhattan distance 1 from the center.
    auto collect = [&g](int cx, int cy) {
        std::vector<int32_t> out;
        const int dx[4] = {1, -1, 0, 0};
        const int dy[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int32_t q = g.qubit_at(cx + dx[k], cy + dy[k]);
            if (q >= 0) out.push_back(q);
        }
        return out;
    };

    for (int i = 1; i < L; ++i)
        for (int j = 0; j < L; ++j) {
            g.star_coord.push_back({2 * i, 2 * j});
            g.stars.push_back(collect(2 * i, 2 * j));
        }
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < L - 1; ++j) {
            g.plaquette_coord.push_back({2 * i + 1, 2 * j + 1});
            g.plaquettes.push_back(collect(2 * i + 1, 2 * j + 1));
        }

    for (int i = 0; i < L; ++i) {
        std::vector<int32_t> col;
        for (int j = 0; j < L; ++j) col.push_back(g.qubit_at(2 * i + 1, 2 * j));
        g.logical_x_columns.push_back(std::move(col));
    }
    for (int j = 0; j < L; ++j) {
        std::vector<int32_t> row;
        for (int i = 0; i < L; ++i) row.push_back(g.qubit_at(2 * i + 1, 2 * j));
        g.logical_z_rows.push_back(std::move(row));
    }
    return g;
}

SyndromeString syndrome_string(const LatticeGeometry& geom, const SyndromeSpec& spec) {
    const int L = geom.L;
    auto check = [&](const std::array<int, 2>& p) {
        if (geom.plaquette_index(p[0], p[1]) < 0)
            throw std::invalid_argument("syndrome_string: plaquette (" + std::to_string(p[0]) + "," +
                                        std::to_string(p[1]) + ") invalid for L=" + std::to_string(L));
    };
    for (const auto& p : spec.plaquettes) check(p);
    if (spec.plaquettes.size() > 2)
        throw std::invalid_argument("syndrome_string: at most two flipped plaquettes supported");
    if (spec.plaquettes.size() == 2 && spec.plaquettes[0] == spec.plaquettes[1])
        throw std::invalid_argument("syndrome_string: flipped plaquettes must be distinct");

    std::vector<int32_t> qs;
    if (spec.plaquettes.size() == 1) {
        // Straight down to the bottom rough boundary.
        const int x = spec.plaquettes[0][0], y = spec.plaquettes[0][1];
        for (int j = 0; j <= y; ++j) qs.push_back(geom.qubit_at(2 * x + 1, 2 * j));
    } else if (spec.plaquettes.size() == 2) {
        const int x1 = spec.plaquettes[0][0], y1 = spec.plaquettes[0][1];
        const int x2 = spec.plaquettes[1][0], y2 = spec.plaquettes[1][1];
        // Vertical leg in column x1, then horizontal leg in row y2.
        for (int j = std::min(y1, y2) + 1; j <= std::max(y1, y2); ++j)
            qs.push_back(geom.qubit_at(2 * x1 + 1, 2 * j));
        for (int i = std::min(x1, x2) + 1; i <= std::max(x1, x2); ++i)
            qs.push_back(geom.qubit_at(2 * i, 2 * y2 + 1));
    }
    std::sort(qs.begin(), qs.end());
    return SyndromeString{std::move(qs)};
}

}  // namespace surfmc
