#include "surfmc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "surfmc/errors.hpp"

namespace surfmc {

namespace {

ObservablePoint point_from(const Accumulator& acc, const std::string& name) {
    ObservablePoint p;
    p.L = acc.L;
    p.beta = acc.beta;
    p.J = acc.J;
    p.syndrome = acc.syndrome;
    p.sweeps = acc.sweeps;
    p.burn_in = acc.burn_in;
    p.seed = acc.seed;
    p.n_chains = acc.n_chains;
    p.observable = name;
    p.n_samples = acc.samples();
    return p;
}

// Jackknife over aligned bins: value(full means), replicas with one bin
// deleted. Series must share bin count (same recording cadence).
struct Jackknife {
    double value = 0.0;
    double error = 0.0;
    int n_bins = 0;
};

Jackknife jackknife2(const BinnedSeries& a, const BinnedSeries& b,
                     const std::function<double(double, double)>& f) {
    const size_t nb = a.bins.size();
    if (nb != b.bins.size() || nb < 2)
        throw std::invalid_argument("jackknife: need >= 2 aligned bins");
    double sa = 0.0, sb = 0.0;
    for (size_t k = 0; k < nb; ++k) {
        sa += a.bins[k];
        sb += b.bins[k];
    }
    Jackknife out;
    out.n_bins = static_cast<int>(nb);
    out.value = f(a.mean(), b.mean());
    std::vector<double> reps(nb);
    double rbar = 0.0;
    for (size_t k = 0; k < nb; ++k) {
        reps[k] = f((sa - a.bins[k]) / (nb - 1), (sb - b.bins[k]) / (nb - 1));
        rbar += reps[k];
    }
    rbar /= nb;
    double sq = 0.0;
    for (double r : reps) sq += (r - rbar) * (r - rbar);
    out.error = std::sqrt(sq * (nb - 1) / nb);
    return out;
}

}  // namespace

double fidelity_from_ratio(double r) {
    if (r < 0.0) throw std::invalid_argument("fidelity_from_ratio: r must be >= 0");
    return 1.0 / std::sqrt(1.0 + r * r);
}

namespace {

ObservablePoint ratio_point(const Accumulator& acc, const std::string& name, bool absolute) {
    const SampleStats s = estimate(acc, Obs::StringValue);
    const auto f = [absolute](double sc, double sv) {
        const double r = sc / sv;
        return absolute ? std::abs(r) : r;
    };
    const Jackknife jk = jackknife2(acc.get(Obs::StringTimesClass), acc.get(Obs::StringValue), f);
    ObservablePoint p = point_from(acc, name);
    p.mean = jk.value;
    p.error = jk.error;
    p.n_bins = jk.n_bins;
    if (std::abs(s.mean) < 3.0 * s.error) p.flags = "ill_conditioned";
    return p;
}

}  // namespace

ObservablePoint ratio_BA(const Accumulator& acc) { return ratio_point(acc, "abs_BA_ratio", true); }

ObservablePoint signed_ratio_BA(const Accumulator& acc) {
    return ratio_point(acc, "signed_BA_ratio", false);
}

ObservablePoint heat_capacity(const Accumulator& acc, double beta, int n_qubits) {
    estimate(acc, Obs::Energy);  // enforces the sample-count precondition
    const double b2n = beta * beta / n_qubits;
    const Jackknife jk = jackknife2(acc.get(Obs::EnergySquared), acc.get(Obs::Energy),
                                    [b2n](double e2, double e) { return b2n * (e2 - e * e); });
    ObservablePoint p = point_from(acc, "heat_capacity");
    p.mean = jk.value;
    p.error = jk.error;
    p.n_bins = jk.n_bins;
    return p;
}

ObservablePoint fidelity_point(const Accumulator& acc) {
    const SampleStats s = estimate(acc, Obs::StringValue);
    const Jackknife jk = jackknife2(acc.get(Obs::StringTimesClass), acc.get(Obs::StringValue),
                                    [](double sc, double sv) {
                                        const double r = std::abs(sc / sv);
                                        return 1.0 / std::sqrt(1.0 + r * r);
                                    });
    ObservablePoint p = point_from(acc, "fidelity");
    p.mean = jk.value;
    p.error = jk.error;
    p.n_bins = jk.n_bins;
    if (std::abs(s.mean) < 3.0 * s.error) p.flags = "ill_conditioned";
    return p;
}

ObservablePoint observable_point(const Accumulator& acc, Obs o, const std::string& name) {
    const SampleStats s = estimate(acc, o);
    ObservablePoint p = point_from(acc, name);
    p.mean = s.mean;
    p.error = s.error;
    p.n_bins = s.n_bins;
    return p;
}

PeakEstimate peak_beta(const std::vector<ObservablePoint>& curve, int window) {
    if (curve.size() < 5) throw std::invalid_argument("peak_beta: need >= 5 grid points");
    if (window < 3 || window % 2 == 0)
        throw std::invalid_argument("peak_beta: window must be odd and >= 3");
    std::vector<ObservablePoint> pts = curve;
    std::sort(pts.begin(), pts.end(),
              [](const ObservablePoint& a, const ObservablePoint& b) { return a.beta < b.beta; });

    size_t imax = 0;
    for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i].mean > pts[imax].mean) imax = i;
    const int h = window / 2;
    if (static_cast<int>(imax) < h || imax + h >= pts.size())
        throw UnbracketedPeakError("peak_beta: maximum at grid edge (beta = " +
                                   std::to_string(pts[imax].beta) + ")");

    // Weighted parabola y = c0 + c1 t + c2 t^2 around the maximum.
    const double t0 = pts[imax].beta;
    double m[3][3] = {};
    double v[3] = {};
    bool weighted = true;
    for (int k = -h; k <= h; ++k)
        if (pts[imax + k].error <= 0.0) weighted = false;
    for (int k = -h; k <= h; ++k) {
        const ObservablePoint& p = pts[imax + k];
        const double t = p.beta - t0;
        const double w = weighted ? 1.0 / (p.error * p.error) : 1.0;
        const double basis[3] = {1.0, t, t * t};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += w * basis[r] * basis[c];
            v[r] += w * basis[r] * p.mean;
        }
    }
    // Solve the 3x3 system and invert for the covariance (Gauss-Jordan).
    double aug[3][6] = {};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) aug[r][c] = m[r][c];
        aug[r][3 + r] = 1.0;
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
        if (std::abs(aug[piv][col]) < 1e-300)
            throw UnbracketedPeakError("peak_beta: degenerate parabola fit");
        std::swap(aug[piv], aug[col]);
        const double d = aug[col][col];
        for (int c = 0; c < 6; ++c) aug[col][c] /= d;
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = aug[r][col];
            for (int c = 0; c < 6; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    double coef[3];
    double cov[3][3];
    for (int r = 0; r < 3; ++r) {
        coef[r] = 0.0;
        for (int c = 0; c < 3; ++c) {
            coef[r] += aug[r][c + 3] * v[c];
            cov[r][c] = aug[r][c + 3];
        }
    }
    if (coef[2] >= 0.0) throw UnbracketedPeakError("peak_beta: local fit is not concave");

    PeakEstimate out;
    out.beta = t0 - coef[1] / (2.0 * coef[2]);
    if (weighted) {
        // Delta method on t* = -c1/(2 c2).
        const double g1 = -1.0 / (2.0 * coef[2]);
        const double g2 = coef[1] / (2.0 * coef[2] * coef[2]);
        const double var = g1 * g1 * cov[1][1] + 2.0 * g1 * g2 * cov[1][2] + g2 * g2 * cov[2][2];
        out.error = var > 0.0 ? std::sqrt(var) : 0.0;
    }
    return out;
}

namespace {

struct LinearFit {
    double b = 0.0;       // beta_c_inf
    double a = 0.0;       // y coefficient
    double chi2 = 0.0;
    double var_b = 0.0;
};

LinearFit solve_at(const std::vector<PeakPoint>& peaks, double x, bool weighted) {
    double sw = 0.0, su = 0.0, suu = 0.0, sy = 0.0, suy = 0.0;
    for (const auto& p : peaks) {
        const double w = weighted ? 1.0 / (p.error * p.error) : 1.0;
        const double u = std::pow(static_cast<double>(p.L), x);
        sw += w;
        su += w * u;
        suu += w * u * u;
        sy += w * p.beta;
        suy += w * u * p.beta;
    }
    // beta = b - a u  ->  normal equations in (b, a).
    const double det = sw * suu - su * su;
    LinearFit fit;
    fit.b = (sy * suu - su * suy) / det;
    fit.a = (su * sy - sw * suy) / det;
    fit.var_b = suu / det;
    for (const auto& p : peaks) {
        const double w = weighted ? 1.0 / (p.error * p.error) : 1.0;
        const double u = std::pow(static_cast<double>(p.L), x);
        const double r = p.beta - (fit.b - fit.a * u);
        fit.chi2 += w * r * r;
    }
    return fit;
}

}  // namespace

ScalingFit fit_beta_c(const std::vector<PeakPoint>& peaks, ExponentMode mode, double fixed_x) {
    if (peaks.size() < 3)
        throw std::invalid_argument("fit_beta_c: need at least 3 peak positions");
    bool weighted = true;
    for (const auto& p : peaks)
        if (p.error <= 0.0) weighted = false;

    double best_x = fixed_x;
    if (mode == ExponentMode::Free) {
        double lo = -3.0, hi = -0.2, step = 0.0025;
        for (int round = 0; round < 3; ++round) {
            double best_chi = std::numeric_limits<double>::infinity();
            double arg = lo;
            for (double x = lo; x <= hi + step / 2; x += step) {
                const double chi = solve_at(peaks, x, weighted).chi2;
                if (chi < best_chi) {
                    best_chi = chi;
                    arg = x;
                }
            }
            best_x = arg;
            lo = std::max(-3.0, arg - step);
            hi = std::min(-0.2, arg + step);
            step /= 10.0;
        }
    }

    const LinearFit fit = solve_at(peaks, best_x, weighted);
    ScalingFit out;
    out.beta_c_inf = fit.b;
    out.beta_c_err = weighted && fit.var_b > 0.0 ? std::sqrt(fit.var_b) : 0.0;
    out.y = fit.a;
    out.x = best_x;
    out.chi2 = fit.chi2;
    out.n_points = static_cast<int>(peaks.size());
    out.inputs = peaks;
    return out;
}

}  // namespace surfmc
