#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace surfmc {

// Observables recorded per measurement sweep.
enum class Obs {
    ClassLabel = 0,        // c, the logical-X eigenvalue
    StringValue,           // S = product of spins on the syndrome string
    StringTimesClass,      // S * c
    Energy,                // E
    EnergySquared,         // E^2
    BulkSpin,              // sigma^x at the central qubit
    kCount,
};
inline constexpr int kNumObs = static_cast<int>(Obs::kCount);

const char* obs_name(Obs o);

// Time series blocked into fixed-size bins. The grand mean uses every
// sample; bin means (full bins only) feed the error analysis.
struct BinnedSeries {
    int64_t bin_size = 1;
    int64_t n = 0;
    double total = 0.0;
    std::vector<double> bins;  // completed bin means
    double current = 0.0;
    int64_t current_n = 0;

    void add(double x);
    void merge(const BinnedSeries& other);  // requires equal bin_size
    double mean() const { return n > 0 ? total / static_cast<double>(n) : 0.0; }
};

struct SampleStats {
    double mean = 0.0;
    double error = 0.0;  // standard error of the mean
    int n_bins = 0;
    int64_t bin_size = 1;
};

// Largest power of two leaving at least 32 bins (minimum 1).
int64_t bin_size_for(int64_t n_samples);

// Binned Monte Carlo series for all observables of one run, plus acceptance
// counters, tagged with everything needed to reproduce the run.
struct Accumulator {
    // provenance
    int L = 0;
    double beta = 0.0;
    std::array<double, 4> J{};
    std::string syndrome = "none";
    int64_t sweeps = 0;
    int64_t burn_in = 0;
    uint64_t seed = 0;
    int n_chains = 1;
    int64_t measure_every = 1;

    int64_t plaquette_attempts = 0;
    int64_t plaquette_accepts = 0;
    int64_t line_attempts = 0;
    int64_t line_accepts = 0;

    std::array<BinnedSeries, kNumObs> series;

    explicit Accumulator(int64_t bin_size = 1);

    void record(double class_label, double string_val, double energy, double bulk_spin);
    // Associative, order-insensitive merge of independent chains.
    void merge(const Accumulator& other);
    int64_t samples() const { return series[0].n; }
    const BinnedSeries& get(Obs o) const { return series[static_cast<size_t>(o)]; }

    double plaquette_acceptance() const;
    double line_acceptance() const;
};

// Mean and binning standard error for one recorded observable.
// Requires at least 64 recorded samples.
SampleStats estimate(const Accumulator& acc, Obs o);

}  // namespace surfmc
