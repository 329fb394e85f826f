#include <cmath>
#include <set>
#include <string>

#include <doctest.h>

#include "surfmc/errors.hpp"
#include "surfmc/oracle.hpp"
#include "surfmc/state.hpp"

using namespace surfmc;
using doctest::Approx;

TEST_CASE("L=2 spectrum and closed forms") {
    const LatticeGeometry g = build_lattice(2);
    const NeighborTable t = neighbor_table(g, CouplingSet::nearest(1.0));
    const SyndromeString none = syndrome_string(g, SyndromeSpec{});

    // Independent check of the 8-state spectrum by direct construction:
    // class I = {-4, 0, 0, +4}, class II all at 0.
    std::multiset<double> class_i, class_ii;
    for (uint64_t mask = 0; mask < 4; ++mask)
        for (int line = 0; line < 2; ++line) {
            SpinConfiguration c = vacuum(g, t);
            for (int p = 0; p < 2; ++p)
                if (mask & (1ull << p)) flip_plaquette(c, p, t);
            if (line) flip_line(c, 0, t);
            (line ? class_ii : class_i).insert(std::round(c.energy));
        }
    CHECK(class_i == std::multiset<double>{-4, 0, 0, 4});
    CHECK(class_ii == std::multiset<double>{0, 0, 0, 0});

    for (double beta : {0.05, 0.217, 0.25, 0.5}) {
        const ExactResult r = enumerate_exact(g, t, beta, none);
        CHECK(r.n_states == 8);
        // <c> = (cosh(4b) - 1) / (cosh(4b) + 3) from the spectrum above.
        const double ch = std::cosh(4.0 * beta);
        CHECK(r.mean_class == Approx((ch - 1.0) / (ch + 3.0)).epsilon(1e-12));
        // Z_I/Z_II relative weights: 2cosh(4b) + 2 vs 4.
        CHECK(r.z_class_i / r.z_class_ii == Approx((2.0 * ch + 2.0) / 4.0).epsilon(1e-12));
        // No-error sector: S identically 1.
        CHECK(r.mean_string == Approx(1.0).epsilon(1e-12));
        CHECK(r.ratio_ba == Approx(std::abs(r.mean_class)).epsilon(1e-12));
        // <E> and <E^2> from the spectrum.
        const double z = 2.0 * ch + 6.0;
        CHECK(r.mean_energy == Approx(-8.0 * std::sinh(4.0 * beta) / z).epsilon(1e-12));
        CHECK(r.mean_energy_sq == Approx(32.0 * ch / z).epsilon(1e-12));
    }

    const ExactResult spot = enumerate_exact(g, t, 0.25, none);
    CHECK(std::abs(spot.mean_class - 0.11954) <= 1e-5);
    CHECK(std::abs(spot.heat_capacity - 0.05455) <= 1e-5);
}

TEST_CASE("beta = 0 limits") {
    for (int L : {2, 3, 4}) {
        const LatticeGeometry g = build_lattice(L);
        const NeighborTable t = neighbor_table(g, CouplingSet::nearest(1.0));
        const ExactResult none = enumerate_exact(g, t, 0.0, syndrome_string(g, SyndromeSpec{}));
        CHECK(none.mean_class == Approx(0.0).epsilon(1e-12));
        CHECK(none.heat_capacity == 0.0);
        CHECK(none.z_class_i == Approx(none.z_class_ii).epsilon(1e-12));

        const ExactResult one =
            enumerate_exact(g, t, 0.0, syndrome_string(g, SyndromeSpec{{{0, 0}}}));
        CHECK(one.mean_string == Approx(0.0).epsilon(1e-12));
        CHECK(one.mean_string_class == Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("state count matches the constraint dimension") {
    for (int L : {2, 3, 4, 5}) {
        const LatticeGeometry g = build_lattice(L);
        const NeighborTable t = neighbor_table(g, CouplingSet::nearest(1.0));
        const ExactResult r = enumerate_exact(g, t, 0.1, syndrome_string(g, SyndromeSpec{}));
        CHECK(r.n_states == int64_t{1} << (g.num_qubits() - g.n_star));
        // Uniform-at-beta->0 consistency: weights positive and finite.
        CHECK(r.z_class_i > 0.0);
        CHECK(r.z_class_ii > 0.0);
    }
}

TEST_CASE("enumeration bound") {
    const LatticeGeometry g6 = build_lattice(6);
    const NeighborTable t6 = neighbor_table(g6, CouplingSet::nearest(1.0));
    CHECK_THROWS_AS(enumerate_exact(g6, t6, 0.1, syndrome_string(g6, SyndromeSpec{})),
                    CapabilityError);
}

TEST_CASE("string averages at finite beta match a direct sum at L=2") {
    const LatticeGeometry g = build_lattice(2);
    const NeighborTable t = neighbor_table(g, CouplingSet::nearest(1.0));
    const SyndromeString str = syndrome_string(g, SyndromeSpec{{{0, 0}}});

    for (double beta : {0.1, 0.3}) {
        double z = 0.0, ws = 0.0, wsc = 0.0;
        for (uint64_t mask = 0; mask < 4; ++mask)
            for (int line = 0; line < 2; ++line) {
                SpinConfiguration c = vacuum(g, t);
                for (int p = 0; p < 2; ++p)
                    if (mask & (1ull << p)) flip_plaquette(c, p, t);
                if (line) flip_line(c, 0, t);
                const double w = std::exp(-beta * (c.energy + 4.0));
                const int s = string_value(c, str);
                z += w;
                ws += w * s;
                wsc += w * s * c.class_label;
            }
        const ExactResult r = enumerate_exact(g, t, beta, str);
        CHECK(r.mean_string == Approx(ws / z).epsilon(1e-12));
        CHECK(r.mean_string_class == Approx(wsc / z).epsilon(1e-12));
        CHECK(r.ratio_ba == Approx(std::abs(wsc / ws)).epsilon(1e-12));
        CHECK(r.fidelity ==
              Approx(1.0 / std::sqrt(1.0 + (wsc / ws) * (wsc / ws))).epsilon(1e-12));
    }
}
