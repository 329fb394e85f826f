#include "surfmc/run.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "surfmc/errors.hpp"
#include "surfmc/oracle.hpp"

namespace surfmc {

using nlohmann::json;

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::vector<double> parse_beta(const json& j) {
    std::vector<double> betas;
    if (j.is_array()) {
        for (const auto& v : j) betas.push_back(v.get<double>());
    } else if (j.is_object()) {
        const double min = j.at("min").get<double>();
        const double max = j.at("max").get<double>();
        const double step = j.at("step").get<double>();
        if (step <= 0.0) throw std::invalid_argument("beta.step must be positive");
        for (int k = 0;; ++k) {
            const double b = min + k * step;
            if (b > max + step * 1e-6) break;
            betas.push_back(b);
        }
    } else {
        throw std::invalid_argument("beta must be a list or a {min,max,step} object");
    }
    if (betas.empty()) throw std::invalid_argument("beta grid is empty");
    for (double b : betas)
        if (b < 0.0 || !std::isfinite(b)) throw std::invalid_argument("beta values must be >= 0");
    return betas;
}

CouplingSet parse_couplings(const json& j) {
    if (j.is_array()) {
        std::vector<double> values = j.get<std::vector<double>>();
        if (values.empty()) throw std::invalid_argument("couplings list is empty");
        if (values.size() > static_cast<size_t>(kMaxNeighborOrder))
            throw std::invalid_argument("at most " + std::to_string(kMaxNeighborOrder) +
                                        " couplings supported");
        return CouplingSet::from_values(values);
    }
    if (j.is_object() && j.contains("ohmic")) {
        const json& o = j.at("ohmic");
        OhmicParameters p;
        p.lambda = o.at("lambda").get<double>();
        p.omega0 = o.at("omega0").get<double>();
        p.v = o.at("v").get<double>();
        p.delta = o.at("delta").get<double>();
        if (p.omega0 <= 0.0 || p.v <= 0.0 || p.delta <= 0.0 || p.lambda < 0.0)
            throw std::invalid_argument("ohmic parameters: need omega0,v,delta > 0 and lambda >= 0");
        if (!o.value("real_truncation", true))
            throw std::invalid_argument("complex couplings are not supported; real_truncation must be true");
        const int orders = o.value("orders", kMaxNeighborOrder);
        if (orders < 1 || orders > kMaxNeighborOrder)
            throw std::invalid_argument("ohmic.orders out of range");
        return couplings_from_ohmic(p, orders);
    }
    throw std::invalid_argument("couplings must be a J list or an {\"ohmic\": {...}} object");
}

SyndromeSpec parse_syndrome(const json& j) {
    SyndromeSpec spec;
    const std::string type = j.at("type").get<std::string>();
    auto coord = [](const json& c) {
        if (!c.is_array() || c.size() != 2)
            throw std::invalid_argument("syndrome plaquette must be an [i, j] pair");
        return std::array<int, 2>{c[0].get<int>(), c[1].get<int>()};
    };
    if (type == "none") {
    } else if (type == "one") {
        spec.plaquettes.push_back(coord(j.at("plaquette")));
    } else if (type == "two") {
        const json& ps = j.at("plaquettes");
        if (!ps.is_array() || ps.size() != 2)
            throw std::invalid_argument("syndrome type two needs exactly two plaquettes");
        spec.plaquettes.push_back(coord(ps[0]));
        spec.plaquettes.push_back(coord(ps[1]));
    } else {
        throw std::invalid_argument("syndrome type must be none, one, or two");
    }
    return spec;
}

}  // namespace

RunConfig parse_config(const json& j, const CliOverrides& overrides) {
    RunConfig cfg;
    cfg.lattice_sizes = j.at("lattice_sizes").get<std::vector<int>>();
    if (cfg.lattice_sizes.empty()) throw std::invalid_argument("lattice_sizes is empty");
    for (int L : cfg.lattice_sizes)
        if (L < 2) throw std::invalid_argument("lattice sizes must be >= 2");

    cfg.betas = parse_beta(j.at("beta"));
    cfg.couplings = parse_couplings(j.at("couplings"));
    cfg.syndrome = j.contains("syndrome") ? parse_syndrome(j.at("syndrome")) : SyndromeSpec{};

    // Syndrome coordinates must be valid on every lattice in the run.
    for (int L : cfg.lattice_sizes)
        for (const auto& p : cfg.syndrome.plaquettes)
            if (p[0] < 0 || p[0] >= L || p[1] < 0 || p[1] >= L - 1)
                throw std::invalid_argument("syndrome plaquette (" + std::to_string(p[0]) + "," +
                                            std::to_string(p[1]) + ") invalid for L=" +
                                            std::to_string(L));

    const json& s = j.at("sampler");
    cfg.sweeps = s.at("sweeps").get<int64_t>();
    if (cfg.sweeps <= 0) throw std::invalid_argument("sampler.sweeps must be positive");
    cfg.burn_in = s.value("burn_in", std::max<int64_t>(cfg.sweeps / 10, 1000));
    if (cfg.burn_in < 0) throw std::invalid_argument("sampler.burn_in must be >= 0");
    cfg.seed = s.value("seed", uint64_t{1});
    cfg.n_chains = s.value("n_chains", 1);
    if (cfg.n_chains < 1) throw std::invalid_argument("sampler.n_chains must be >= 1");
    cfg.measure_every = s.value("measure_every", int64_t{1});
    if (cfg.measure_every < 1) throw std::invalid_argument("sampler.measure_every must be >= 1");
    cfg.random_order = s.value("random_order", false);

    cfg.output_dir = j.value("output_dir", std::string("out"));
    if (j.contains("checkpoints")) {
        cfg.checkpoints = j.at("checkpoints").get<std::vector<int64_t>>();
        for (int64_t c : cfg.checkpoints)
            if (c <= 0) throw std::invalid_argument("checkpoints must be positive");
        std::sort(cfg.checkpoints.begin(), cfg.checkpoints.end());
    } else {
        cfg.checkpoints = {90000, 180000, 900000};
    }

    if (j.contains("fit")) {
        const json& f = j.at("fit");
        const std::string mode = f.value("x_mode", std::string("fixed"));
        if (mode == "fixed")
            cfg.x_mode = ExponentMode::Fixed;
        else if (mode == "free")
            cfg.x_mode = ExponentMode::Free;
        else
            throw std::invalid_argument("fit.x_mode must be fixed or free");
        cfg.fixed_x = f.value("x", -1.0);
        cfg.peak_window = f.value("peak_window", 3);
        if (cfg.peak_window < 3 || cfg.peak_window % 2 == 0)
            throw std::invalid_argument("fit.peak_window must be odd and >= 3");
    }

    if (overrides.seed) cfg.seed = *overrides.seed;
    if (overrides.out_dir) cfg.output_dir = *overrides.out_dir;
    return cfg;
}

RunConfig load_config(const std::string& path, const CliOverrides& overrides) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    in >> j;
    return parse_config(j, overrides);
}

json config_echo(const RunConfig& cfg) {
    json j;
    j["lattice_sizes"] = cfg.lattice_sizes;
    j["beta"] = cfg.betas;
    j["couplings"] = std::vector<double>(cfg.couplings.J.begin(), cfg.couplings.J.end());
    json syn;
    if (cfg.syndrome.plaquettes.empty()) {
        syn["type"] = "none";
    } else if (cfg.syndrome.plaquettes.size() == 1) {
        syn["type"] = "one";
        syn["plaquette"] = cfg.syndrome.plaquettes[0];
    } else {
        syn["type"] = "two";
        syn["plaquettes"] = cfg.syndrome.plaquettes;
    }
    j["syndrome"] = syn;
    j["sampler"] = {{"sweeps", cfg.sweeps},       {"burn_in", cfg.burn_in},
                    {"seed", cfg.seed},           {"n_chains", cfg.n_chains},
                    {"measure_every", cfg.measure_every}, {"random_order", cfg.random_order}};
    j["output_dir"] = cfg.output_dir;
    j["checkpoints"] = cfg.checkpoints;
    j["fit"] = {{"x_mode", cfg.x_mode == ExponentMode::Fixed ? "fixed" : "free"},
                {"x", cfg.fixed_x},
                {"peak_window", cfg.peak_window}};
    return j;
}

uint64_t seed_for_point(uint64_t master_seed, size_t point_index) {
    return splitmix64(master_seed + 0x9E3779B97F4A7C15ull * (point_index + 1));
}

namespace {

struct PointSpec {
    int L = 0;
    double beta = 0.0;
    int64_t sweeps = 0;
    SyndromeSpec syndrome;
    uint64_t seed = 0;
    std::string run_id;
};

// Runs all points (n_chains chains each) on a bounded worker pool; chain
// accumulators are merged in chain order so results do not depend on the
// thread count.
std::vector<Accumulator> run_points(const RunConfig& cfg, const std::vector<PointSpec>& points,
                                    int threads) {
    std::vector<int> sizes = cfg.lattice_sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::vector<LatticeGeometry> geoms;
    std::vector<NeighborTable> tables;
    geoms.reserve(sizes.size());
    for (int L : sizes) geoms.push_back(build_lattice(L));
    tables.reserve(sizes.size());
    for (const auto& g : geoms) tables.push_back(neighbor_table(g, cfg.couplings));
    auto table_for = [&](int L) -> const NeighborTable& {
        const size_t i = std::lower_bound(sizes.begin(), sizes.end(), L) - sizes.begin();
        return tables[i];
    };

    struct Task {
        size_t point;
        int chain;
    };
    std::vector<Task> tasks;
    for (size_t p = 0; p < points.size(); ++p)
        for (int c = 0; c < cfg.n_chains; ++c) tasks.push_back({p, c});

    std::vector<Accumulator> chain_acc(tasks.size(), Accumulator(1));
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;) {
            const size_t t = next.fetch_add(1);
            if (t >= tasks.size()) return;
            try {
                const PointSpec& pt = points[tasks[t].point];
                const NeighborTable& table = table_for(pt.L);
                SamplerConfig scfg;
                scfg.beta = pt.beta;
                scfg.sweeps = pt.sweeps;
                scfg.burn_in = cfg.burn_in;
                scfg.seed = pt.seed;
                scfg.n_chains = cfg.n_chains;
                scfg.measure_every = cfg.measure_every;
                scfg.random_order = cfg.random_order;
                const SyndromeString str = syndrome_string(*table.geom, pt.syndrome);
                Accumulator acc =
                    run_single_chain(*table.geom, table, cfg.couplings, str, scfg, tasks[t].chain);
                acc.syndrome = syndrome_descriptor(pt.syndrome);
                chain_acc[t] = std::move(acc);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    int n_threads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::max(1, std::min<int>(n_threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    std::vector<Accumulator> merged;
    merged.reserve(points.size());
    for (size_t p = 0; p < points.size(); ++p) {
        Accumulator acc = std::move(chain_acc[p * cfg.n_chains]);
        for (int c = 1; c < cfg.n_chains; ++c) acc.merge(chain_acc[p * cfg.n_chains + c]);
        acc.n_chains = cfg.n_chains;
        merged.push_back(std::move(acc));
    }
    return merged;
}

std::string csv_row(const PointSpec& pt, const RunConfig& cfg, const ObservablePoint& o) {
    std::string row = pt.run_id;
    row += "," + std::to_string(pt.L);
    row += "," + fmt(pt.beta, "%.10g");
    for (double j : cfg.couplings.J) row += "," + fmt(j, "%.10g");
    row += "," + syndrome_descriptor(pt.syndrome);
    row += "," + std::to_string(pt.sweeps);
    row += "," + std::to_string(cfg.burn_in);
    row += "," + std::to_string(pt.seed);
    row += "," + std::to_string(cfg.n_chains);
    row += "," + o.observable;
    row += "," + fmt(o.mean);
    row += "," + fmt(o.error);
    row += "," + std::to_string(o.n_bins);
    row += "," + o.flags;
    return row;
}

constexpr const char* kCsvHeader =
    "run_id,L,beta,J1,J2,J3,J4,syndrome,sweeps,burn_in,seed,n_chains,observable,mean,stderr,"
    "n_bins,flags";

// The fixed per-point observable rows, in stable order.
std::vector<ObservablePoint> derive_observables(const Accumulator& acc, const LatticeGeometry& geom) {
    std::vector<ObservablePoint> obs;
    obs.push_back(ratio_BA(acc));
    obs.push_back(signed_ratio_BA(acc));
    obs.push_back(observable_point(acc, Obs::ClassLabel, "class_mean"));
    obs.push_back(observable_point(acc, Obs::Energy, "energy"));
    obs.push_back(heat_capacity(acc, acc.beta, geom.num_qubits()));
    obs.push_back(observable_point(acc, Obs::BulkSpin, "magnetization_x"));
    obs.push_back(fidelity_point(acc));
    ObservablePoint ap;
    ap.observable = "acceptance_plaquette";
    ap.mean = acc.plaquette_acceptance();
    obs.push_back(ap);
    ObservablePoint al;
    al.observable = "acceptance_line";
    al.mean = acc.line_acceptance();
    obs.push_back(al);
    return obs;
}

void write_csv(const std::string& path, const RunConfig& cfg, const std::vector<PointSpec>& points,
               const std::vector<Accumulator>& accs) {
    std::vector<LatticeGeometry> geoms;
    geoms.reserve(cfg.lattice_sizes.size());
    auto geom_for = [&](int L) -> const LatticeGeometry& {
        for (const auto& g : geoms)
            if (g.L == L) return g;
        geoms.push_back(build_lattice(L));
        return geoms.back();
    };
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << kCsvHeader << "\n";
    for (size_t p = 0; p < points.size(); ++p)
        for (const ObservablePoint& o : derive_observables(accs[p], geom_for(points[p].L)))
            out << csv_row(points[p], cfg, o) << "\n";
}

json manifest_points(const RunConfig& cfg, const std::vector<PointSpec>& points,
                     const std::vector<Accumulator>& accs) {
    json arr = json::array();
    for (size_t p = 0; p < points.size(); ++p) {
        json chain_streams = json::array();
        for (int c = 0; c < cfg.n_chains; ++c)
            chain_streams.push_back(points[p].seed ^ static_cast<uint64_t>(c));
        arr.push_back({{"run_id", points[p].run_id},
                       {"L", points[p].L},
                       {"beta", points[p].beta},
                       {"syndrome", syndrome_descriptor(points[p].syndrome)},
                       {"sweeps", points[p].sweeps},
                       {"seed", points[p].seed},
                       {"chain_streams", chain_streams},
                       {"samples", accs[p].samples()},
                       {"plaquette_attempts", accs[p].plaquette_attempts},
                       {"line_attempts", accs[p].line_attempts},
                       {"acceptance_plaquette", accs[p].plaquette_acceptance()},
                       {"acceptance_line", accs[p].line_acceptance()}});
    }
    return arr;
}

void write_manifest(const std::string& path, const char* command, const RunConfig& cfg,
                    const json& points, double wall_seconds, int threads) {
    json m;
    m["command"] = command;
    m["version"] = kVersion;
    m["rng"] = kRngName;
    m["seed_scheme"] = "point: splitmix64(master + golden*(index+1)); chain stream: point_seed xor chain";
    m["master_seed"] = cfg.seed;
    m["config"] = config_echo(cfg);
    m["points"] = points;
    m["wall_clock_seconds"] = wall_seconds;
    m["threads"] = threads;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << m.dump(2) << "\n";
}

int guard(const char* what, const std::function<int()>& body) {
    try {
        return body();
    } catch (const CapabilityError& e) {
        std::fprintf(stderr, "%s: %s\n", what, e.what());
        return kExitCapabilityError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "%s: %s\n", what, e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "%s: %s\n", what, e.what());
        return 1;
    }
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, int threads) {
    return guard("sweep", [&]() {
        const auto start = std::chrono::steady_clock::now();
        std::filesystem::create_directories(cfg.output_dir);

        std::vector<PointSpec> points;
        for (int L : cfg.lattice_sizes)
            for (double beta : cfg.betas) {
                PointSpec pt;
                pt.L = L;
                pt.beta = beta;
                pt.sweeps = cfg.sweeps;
                pt.syndrome = cfg.syndrome;
                pt.seed = seed_for_point(cfg.seed, points.size());
                char id[16];
                std::snprintf(id, sizeof(id), "p%04zu", points.size());
                pt.run_id = id;
                points.push_back(pt);
            }

        const std::vector<Accumulator> accs = run_points(cfg, points, threads);
        write_csv(cfg.output_dir + "/results.csv", cfg, points, accs);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_manifest(cfg.output_dir + "/manifest.json", "sweep", cfg,
                       manifest_points(cfg, points, accs), secs, threads);
        return kExitOk;
    });
}

int cmd_scaling(const RunConfig& cfg, int threads) {
    return guard("scaling", [&]() {
        if (cfg.lattice_sizes.size() < 3)
            throw std::invalid_argument("scaling needs at least 3 lattice sizes");
        const auto start = std::chrono::steady_clock::now();
        std::filesystem::create_directories(cfg.output_dir);

        std::vector<PointSpec> points;
        for (int L : cfg.lattice_sizes)
            for (double beta : cfg.betas) {
                PointSpec pt;
                pt.L = L;
                pt.beta = beta;
                pt.sweeps = cfg.sweeps;
                pt.syndrome = cfg.syndrome;
                pt.seed = seed_for_point(cfg.seed, points.size());
                char id[16];
                std::snprintf(id, sizeof(id), "p%04zu", points.size());
                pt.run_id = id;
                points.push_back(pt);
            }
        const std::vector<Accumulator> accs = run_points(cfg, points, threads);
        write_csv(cfg.output_dir + "/results.csv", cfg, points, accs);

        // Heat-capacity curve and peak per L.
        std::ofstream peaks_out(cfg.output_dir + "/peaks.csv", std::ios::binary);
        peaks_out << "L,beta_peak,stderr,n_grid,flags\n";
        std::vector<PeakPoint> usable;
        for (size_t li = 0; li < cfg.lattice_sizes.size(); ++li) {
            const int L = cfg.lattice_sizes[li];
            const LatticeGeometry geom = build_lattice(L);
            std::vector<ObservablePoint> curve;
            for (size_t bi = 0; bi < cfg.betas.size(); ++bi) {
                const Accumulator& acc = accs[li * cfg.betas.size() + bi];
                curve.push_back(heat_capacity(acc, acc.beta, geom.num_qubits()));
            }
            try {
                const PeakEstimate pk = peak_beta(curve, cfg.peak_window);
                usable.push_back({L, pk.beta, pk.error});
                peaks_out << L << "," << fmt(pk.beta) << "," << fmt(pk.error) << ","
                          << cfg.betas.size() << ",\n";
            } catch (const UnbracketedPeakError& e) {
                std::fprintf(stderr, "scaling: L=%d: %s\n", L, e.what());
                peaks_out << L << ",nan,nan," << cfg.betas.size() << ",unbracketed\n";
            }
        }
        peaks_out.close();

        if (usable.size() < 3)
            throw std::runtime_error("fit refused: fewer than 3 usable peaks");
        const ScalingFit fit = fit_beta_c(usable, cfg.x_mode, cfg.fixed_x);

        json jfit;
        jfit["beta_c_inf"] = fit.beta_c_inf;
        jfit["beta_c_err"] = fit.beta_c_err;
        jfit["y"] = fit.y;
        jfit["x"] = fit.x;
        jfit["x_mode"] = cfg.x_mode == ExponentMode::Fixed ? "fixed" : "free";
        jfit["chi2"] = fit.chi2;
        jfit["n_points"] = fit.n_points;
        json jin = json::array();
        for (const auto& p : fit.inputs)
            jin.push_back({{"L", p.L}, {"beta_peak", p.beta}, {"stderr", p.error}});
        jfit["peaks"] = jin;
        std::ofstream fit_out(cfg.output_dir + "/fit.json", std::ios::binary);
        fit_out << jfit.dump(2) << "\n";

        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_manifest(cfg.output_dir + "/manifest.json", "scaling", cfg,
                       manifest_points(cfg, points, accs), secs, threads);
        return kExitOk;
    });
}

int cmd_syndrome(const RunConfig& cfg, int threads) {
    return guard("syndrome", [&]() {
        if (cfg.syndrome.plaquettes.empty())
            throw std::invalid_argument("syndrome command needs a one- or two-error syndrome");
        const auto start = std::chrono::steady_clock::now();
        std::filesystem::create_directories(cfg.output_dir);

        const int64_t reference_sweeps = cfg.checkpoints.back();
        std::vector<PointSpec> points;
        auto add_point = [&](int L, double beta, int64_t sweeps, const SyndromeSpec& syn) {
            PointSpec pt;
            pt.L = L;
            pt.beta = beta;
            pt.sweeps = sweeps;
            pt.syndrome = syn;
            pt.seed = seed_for_point(cfg.seed, points.size());
            char id[16];
            std::snprintf(id, sizeof(id), "p%04zu", points.size());
            pt.run_id = id;
            points.push_back(pt);
        };
        for (int L : cfg.lattice_sizes) {
            for (int64_t budget : cfg.checkpoints)
                for (double beta : cfg.betas) add_point(L, beta, budget, cfg.syndrome);
            for (double beta : cfg.betas) add_point(L, beta, reference_sweeps, SyndromeSpec{});
        }

        const std::vector<Accumulator> accs = run_points(cfg, points, threads);
        write_csv(cfg.output_dir + "/results.csv", cfg, points, accs);
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_manifest(cfg.output_dir + "/manifest.json", "syndrome", cfg,
                       manifest_points(cfg, points, accs), secs, threads);
        return kExitOk;
    });
}

int cmd_oracle(const RunConfig& cfg) {
    return guard("oracle", [&]() {
        json arr = json::array();
        for (int L : cfg.lattice_sizes) {
            const LatticeGeometry geom = build_lattice(L);
            const NeighborTable table = neighbor_table(geom, cfg.couplings);
            const SyndromeString str = syndrome_string(geom, cfg.syndrome);
            for (double beta : cfg.betas) {
                const ExactResult r = enumerate_exact(geom, table, beta, str);
                arr.push_back({{"L", L},
                               {"beta", beta},
                               {"couplings", cfg.couplings.J},
                               {"syndrome", syndrome_descriptor(cfg.syndrome)},
                               {"n_states", r.n_states},
                               {"z_class_i", r.z_class_i},
                               {"z_class_ii", r.z_class_ii},
                               {"mean_class", r.mean_class},
                               {"mean_string", r.mean_string},
                               {"mean_string_class", r.mean_string_class},
                               {"mean_energy", r.mean_energy},
                               {"mean_energy_sq", r.mean_energy_sq},
                               {"heat_capacity", r.heat_capacity},
                               {"ratio_ba", r.ratio_ba},
                               {"fidelity", r.fidelity}});
            }
        }
        const std::string text = arr.dump(2);
        std::printf("%s\n", text.c_str());
        if (!cfg.output_dir.empty()) {
            std::filesystem::create_directories(cfg.output_dir);
            std::ofstream out(cfg.output_dir + "/oracle.json", std::ios::binary);
            out << text << "\n";
        }
        return kExitOk;
    });
}

}  // namespace surfmc
