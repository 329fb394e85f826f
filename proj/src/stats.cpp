#include "surfmc/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace surfmc {

const char* obs_name(Obs o) {
    switch (o) {
        case Obs::ClassLabel: return "class_label";
        case Obs::StringValue: return "string_value";
        case Obs::StringTimesClass: return "string_times_class";
        case Obs::Energy: return "energy";
        case Obs::EnergySquared: return "energy_squared";
        case Obs::BulkSpin: return "bulk_spin";
        default: return "unknown";
    }
}

void BinnedSeries::add(double x) {
    total += x;
    ++n;
    current += x;
    if (++current_n == bin_size) {
        bins.push_back(current / static_cast<double>(bin_size));
        current = 0.0;
        current_n = 0;
    }
}

// Partial trailing bins contribute to the mean only; they are never
// stitched across chains.
void BinnedSeries::merge(const BinnedSeries& other) {
    if (bin_size != other.bin_size)
        throw std::invalid_argument("BinnedSeries::merge: bin sizes differ");
    total += other.total;
    n += other.n;
    bins.insert(bins.end(), other.bins.begin(), other.bins.end());
}

int64_t bin_size_for(int64_t n_samples) {
    int64_t size = 1;
    while (n_samples / (size * 2) >= 32) size *= 2;
    return size;
}

Accumulator::Accumulator(int64_t bin_size) {
    for (auto& s : series) s.bin_size = bin_size;
}

void Accumulator::record(double class_label, double string_val, double energy, double bulk_spin) {
    series[static_cast<size_t>(Obs::ClassLabel)].add(class_label);
    series[static_cast<size_t>(Obs::StringValue)].add(string_val);
    series[static_cast<size_t>(Obs::StringTimesClass)].add(string_val * class_label);
    series[static_cast<size_t>(Obs::Energy)].add(energy);
    series[static_cast<size_t>(Obs::EnergySquared)].add(energy * energy);
    series[static_cast<size_t>(Obs::BulkSpin)].add(bulk_spin);
}

void Accumulator::merge(const Accumulator& other) {
    for (size_t i = 0; i < series.size(); ++i) series[i].merge(other.series[i]);
    plaquette_attempts += other.plaquette_attempts;
    plaquette_accepts += other.plaquette_accepts;
    line_attempts += other.line_attempts;
    line_accepts += other.line_accepts;
}

double Accumulator::plaquette_acceptance() const {
    return plaquette_attempts > 0
               ? static_cast<double>(plaquette_accepts) / static_cast<double>(plaquette_attempts)
               : 0.0;
}

double Accumulator::line_acceptance() const {
    return line_attempts > 0 ? static_cast<double>(line_accepts) / static_cast<double>(line_attempts)
                             : 0.0;
}

SampleStats estimate(const Accumulator& acc, Obs o) {
    const BinnedSeries& s = acc.get(o);
    if (s.n < 64) throw std::invalid_argument("estimate: need at least 64 samples");
    SampleStats out;
    out.mean = s.mean();
    out.bin_size = s.bin_size;
    out.n_bins = static_cast<int>(s.bins.size());
    if (out.n_bins >= 2) {
        double bm = 0.0;
        for (double b : s.bins) bm += b;
        bm /= out.n_bins;
        double sq = 0.0;
        for (double b : s.bins) sq += (b - bm) * (b - bm);
        out.error = std::sqrt(sq / (static_cast<double>(out.n_bins) * (out.n_bins - 1)));
    }
    return out;
}

}  // namespace surfmc
