#include "trotterkit/bench.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "trotterkit/catalog.hpp"
#include "trotterkit/taylor.hpp"

namespace trotterkit::bench {

std::vector<double> log_grid(double h_min, double h_max, int points_per_decade) {
    if (!(h_min > 0.0) || !(h_max >= h_min))
        throw std::invalid_argument("log_grid: need 0 < h_min <= h_max");
    if (points_per_decade < 1)
        throw std::invalid_argument("log_grid: need at least one point per decade");
    std::vector<double> grid;
    const double lg_max = std::log10(h_max);
    const double lg_min = std::log10(h_min);
    for (int j = 0;; ++j) {
        const double lg = lg_max - static_cast<double>(j) / points_per_decade;
        if (lg < lg_min - 1e-12) break;
        grid.push_back(std::pow(10.0, lg));
    }
    return grid;
}

double adjust_step(double t, double h) {
    if (!(t > 0.0) || !(h > 0.0))
        throw std::invalid_argument("adjust_step: need positive t and h");
    const auto steps = std::max<long long>(1, std::llround(t / h));
    return t / static_cast<double>(steps);
}

SpinChainConfig make_model(const std::string& model, int sites, std::uint64_t seed) {
    if (model == "xz") return SpinChainConfig::xz(sites, seed);
    if (model == "xxz") return SpinChainConfig::xxz(sites, seed);
    throw std::invalid_argument("unknown model '" + model + "'; expected xz or xxz");
}

namespace {

void check_model_arrangement(const std::string& model, Arrangement arrangement) {
    if (arrangement.needs_xz() && model != "xz")
        throw std::invalid_argument("arrangement " + arrangement.str() +
                                    " requires --model xz");
}

bool conjugate_for(const SplittingScheme& scheme, std::optional<bool> flag) {
    return flag.has_value() ? *flag : !scheme.unitary();
}

BenchRecord base_record(const std::string& scheme_name, int order, int cycles,
                        Arrangement arrangement, const SpinChainConfig& config,
                        double t, double h) {
    BenchRecord r;
    r.scheme = scheme_name;
    r.order = order;
    r.cycles = cycles;
    r.arrangement = arrangement;
    r.sites = config.sites;
    r.seed = config.seed;
    r.t = t;
    r.h = h;
    r.cost_raw = static_cast<double>(cycles) / h;
    r.cost_scaled = r.cost_raw * stage_cost_factor(arrangement.stage_count(config.sites));
    return r;
}

}  // namespace

std::vector<BenchRecord> run_bench_cost(const CostBenchParams& params) {
    check_model_arrangement(params.model, params.arrangement);
    const SpinChainConfig config = make_model(params.model, params.sites, params.seed);
    const auto grid = log_grid(params.h_min, params.h_max, params.points_per_decade);
    const double gamma = spectral_bound(config);

    std::vector<BenchRecord> records;
    for (const auto& name : params.schemes) {
        if (name == kTaylorName) {
            for (double h_req : grid) {
                const double h = adjust_step(params.t, h_req);
                if (gamma * h > TaylorPlan::kMaxGammaH) continue;
                const int k = cutoff_for_step(gamma * h, TaylorPlan::kDefaultEpsilon);
                BenchRecord r = base_record(kTaylorName, 0, kTaylorCostCycles,
                                            params.arrangement, config, params.t, h);
                r.error = taylor_error(config, h, params.t, k);
                records.push_back(std::move(r));
            }
            continue;
        }
        const SplittingScheme& scheme = get_scheme(name);
        const bool conj = conjugate_for(scheme, params.conjugate_alternating);
        for (double h_req : grid) {
            const double h = adjust_step(params.t, h_req);
            BenchRecord r = base_record(name, scheme.order, scheme.cycles,
                                        params.arrangement, config, params.t, h);
            r.conjugate_alternating = conj;
            r.error = trotter_error(config, scheme, params.arrangement, h, params.t, conj);
            records.push_back(std::move(r));
        }
    }
    return records;
}

std::vector<BenchRecord> run_bench_time(const TimeBenchParams& params) {
    check_model_arrangement(params.model, params.arrangement);
    if (!(params.matched_cost > 0.0))
        throw std::invalid_argument("bench-time: matched cost must be positive");
    const SpinChainConfig config = make_model(params.model, params.sites, params.seed);
    const double factor = stage_cost_factor(params.arrangement.stage_count(params.sites));
    const double gamma = spectral_bound(config);

    std::vector<BenchRecord> records;
    for (const auto& name : params.schemes) {
        const bool is_taylor = (name == kTaylorName);
        const SplittingScheme* scheme = is_taylor ? nullptr : &get_scheme(name);
        const int cycles = is_taylor ? kTaylorCostCycles : scheme->cycles;
        // scaled cost = cycles/h * factor = matched_cost
        const double h_target = static_cast<double>(cycles) * factor / params.matched_cost;
        const bool conj = is_taylor ? false : conjugate_for(*scheme, params.conjugate_alternating);
        for (double t : params.t_grid) {
            if (!(t > 0.0)) throw std::invalid_argument("bench-time: t values must be positive");
            const double h = adjust_step(t, h_target);
            if (is_taylor && gamma * h > TaylorPlan::kMaxGammaH) continue;
            BenchRecord r = base_record(name, is_taylor ? 0 : scheme->order, cycles,
                                        params.arrangement, config, t, h);
            r.conjugate_alternating = conj;
            const double err =
                is_taylor
                    ? taylor_error(config, h, t,
                                   cutoff_for_step(gamma * h, TaylorPlan::kDefaultEpsilon))
                    : trotter_error(config, *scheme, params.arrangement, h, t, conj);
            r.error = err / t;
            records.push_back(std::move(r));
        }
    }
    return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
    os << "scheme,order,cycles,arrangement,L,seed,t,h,cost_raw,cost_scaled,error,conj_alt\n";
    for (const auto& r : records) {
        os << r.scheme << ',' << r.order << ',' << r.cycles << ',' << r.arrangement.str()
           << ',' << r.sites << ',' << r.seed << ',' << format_g17(r.t) << ','
           << format_g17(r.h) << ',' << format_g17(r.cost_raw) << ','
           << format_g17(r.cost_scaled) << ',' << format_g17(r.error) << ','
           << (r.conjugate_alternating ? 1 : 0) << '\n';
    }
}

std::optional<double> fit_order_slope(const std::vector<double>& h,
                                      const std::vector<double>& error,
                                      double floor, double ceiling) {
    if (h.size() != error.size())
        throw std::invalid_argument("fit_order_slope: mismatched inputs");
    std::vector<std::pair<double, double>> usable;  // (log10 h, log10 error)
    for (std::size_t i = 0; i < h.size(); ++i)
        if (error[i] > floor && error[i] < ceiling)
            usable.emplace_back(std::log10(h[i]), std::log10(error[i]));
    if (usable.size() < 3) return std::nullopt;
    std::sort(usable.begin(), usable.end());

    // Largest cost = smallest h: fit over the lowest available h decade.
    const double lg_lo = usable.front().first;
    std::vector<std::pair<double, double>> window;
    for (const auto& p : usable)
        if (p.first <= lg_lo + 1.0 + 1e-12) window.push_back(p);
    if (window.size() < 3) window.assign(usable.begin(), usable.begin() + 3);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [x, y] : window) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(window.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace trotterkit::bench
