#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "surfmc/stats.hpp"

namespace surfmc {

// One derived observable with enough provenance to re-run the point.
struct ObservablePoint {
    int L = 0;
    double beta = 0.0;
    std::array<double, 4> J{};
    std::string syndrome = "none";
    int64_t sweeps = 0;
    int64_t burn_in = 0;
    uint64_t seed = 0;
    int n_chains = 1;

    std::string observable;
    double mean = 0.0;
    double error = 0.0;
    int n_bins = 0;
    int64_t n_samples = 0;
    std::string flags;  // "" or "ill_conditioned"
};

// F = 1 / sqrt(1 + r^2).
double fidelity_from_ratio(double r);

// |<S c> / <S>| with jackknife error over bins. Flagged "ill_conditioned"
// when |<S>| < 3 stderr(S); the value is still reported.
ObservablePoint ratio_BA(const Accumulator& acc);

// The same ratio with its sign kept.
ObservablePoint signed_ratio_BA(const Accumulator& acc);

// C = beta^2 (<E^2> - <E>^2) / n_qubits, jackknife error over bins.
ObservablePoint heat_capacity(const Accumulator& acc, double beta, int n_qubits);

// Fidelity of the sampled ratio, jackknifed directly.
ObservablePoint fidelity_point(const Accumulator& acc);

// Plain binned mean/error of one recorded observable.
ObservablePoint observable_point(const Accumulator& acc, Obs o, const std::string& name);

struct PeakEstimate {
    double beta = 0.0;
    double error = 0.0;
};

// Vertex of a weighted parabola through the maximum of a (beta, C) curve
// and its neighbors (window points total, odd, default 3). Requires >= 5
// grid points; throws UnbracketedPeakError when the maximum sits at a grid
// edge or the local fit is not concave.
PeakEstimate peak_beta(const std::vector<ObservablePoint>& curve, int window = 3);

struct PeakPoint {
    int L = 0;
    double beta = 0.0;
    double error = 0.0;
};

enum class ExponentMode { Fixed, Free };

// Result of fitting beta_c(L) = beta_c_inf - y * L^x.
struct ScalingFit {
    double beta_c_inf = 0.0;
    double beta_c_err = 0.0;
    double y = 0.0;
    double x = -1.0;
    double chi2 = 0.0;
    int n_points = 0;
    std::vector<PeakPoint> inputs;
};

// Weighted least squares on peak positions. Fixed mode solves the linear
// problem at x = fixed_x; free mode scans x in [-3, -0.2] with an inner
// linear solve and refines around the chi^2 minimum. Needs >= 3 distinct L.
ScalingFit fit_beta_c(const std::vector<PeakPoint>& peaks, ExponentMode mode,
                      double fixed_x = -1.0);

}  // namespace surfmc
