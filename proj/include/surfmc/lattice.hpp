#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace surfmc {

// Coordinates are stored doubled (2x, 2y) so that link midpoints at
// half-integer positions stay exact integers. A qubit sits on a link:
// horizontal links at (i+1/2, j) -> doubled (2i+1, 2j), vertical links at
// (i, j+1/2) -> doubled (2i, 2j+1). Exactly one doubled coordinate is odd.
struct QubitId {
    int32_t index;
    int32_t cx;  // doubled x
    int32_t cy;  // doubled y
};

// Planar surface-code geometry with qubits on the links of an L x L grid:
//   horizontal qubits (i+1/2, j), i in [0,L), j in [0,L)      -> L^2
//   vertical qubits   (i, j+1/2), i in [1,L), j in [0,L-1)    -> (L-1)^2
//   stars at vertices (i, j), i in [1,L), j in [0,L)          -> L(L-1)
//   plaquettes at     (i+1/2, j+1/2), i in [0,L), j in [0,L-1)-> L(L-1)
// Rough boundaries top/bottom (dual strings terminate there), smooth
// left/right. Immutable after construction; safe to share across threads.
struct LatticeGeometry {
    int L = 0;
    std::vector<QubitId> qubits;                       // N = L^2 + (L-1)^2
    std::vector<std::vector<int32_t>> stars;           // qubit indices per star
    std::vector<std::vector<int32_t>> plaquettes;      // qubit indices per plaquette
    std::vector<std::array<int32_t, 2>> star_coord;       // doubled center coords
    std::vector<std::array<int32_t, 2>> plaquette_coord;  // doubled center coords
    std::vector<std::vector<int32_t>> logical_x_columns;  // column i: {(i+1/2, j)}, j ascending
    std::vector<std::vector<int32_t>> logical_z_rows;     // row j: {(i+1/2, j)}, i ascending
    int n_star = 0;

    int num_qubits() const { return static_cast<int>(qubits.size()); }

    // Qubit index at doubled coords, or -1.
    int32_t qubit_at(int cx, int cy) const;

    // Plaquette index for dual coords (i, j), i.e. center (i+1/2, j+1/2).
    // Returns -1 if out of range.
    int32_t plaquette_index(int i, int j) const;

    // Horizontal qubit nearest the lattice center, used as the bulk probe.
    int32_t central_qubit() const;

private:
    std::vector<int32_t> coord_to_qubit_;  // dense (2L+1)*(2L+1) lookup
    int coord_stride_ = 0;
    friend LatticeGeometry build_lattice(int L);
};

// Syndrome: the set of plaquettes measured -1, given as dual coords (i, j)
// meaning the plaquette centered at (i+1/2, j+1/2). Zero, one or two entries.
struct SyndromeSpec {
    std::vector<std::array<int, 2>> plaquettes;
};

// Qubit support of the canonical error string for a syndrome. Flipping
// exactly these qubits toggles precisely the plaquettes of the generating
// spec (and no others); as a sigma^x product it commutes with every star.
struct SyndromeString {
    std::vector<int32_t> qubits;  // sorted, unique

    bool contains(int32_t q) const;
};

LatticeGeometry build_lattice(int L);

// Canonical string for a syndrome spec:
//   zero errors -> empty set
//   one error at (x+1/2, y+1/2) -> vertical dual path to the bottom rough
//     boundary: horizontal qubits {(x+1/2, j) : j = 0..y}
//   two errors -> Manhattan dual path p1 -> p2, first vertical then
//     horizontal, collecting the crossed qubits.
SyndromeString syndrome_string(const LatticeGeometry& geom, const SyndromeSpec& spec);

}  // namespace surfmc
