#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "trotterkit/gates.hpp"
#include "trotterkit/spin_chain.hpp"

namespace trotterkit::bench {

/// Name reserved for the truncated-Taylor propagator in scheme lists. Its
/// rows are costed as 3 cycles, the measured runtime equivalence of the
/// k = 17 implementation.
inline const std::string kTaylorName = "taylor";
constexpr int kTaylorCostCycles = 3;

/// One (scheme, arrangement, h, t) measurement.
struct BenchRecord {
    std::string scheme;
    int order = 0;   ///< 0 for the non-polynomial Taylor rows
    int cycles = 0;
    Arrangement arrangement;
    int sites = 0;
    std::uint64_t seed = 0;
    double t = 0.0;
    double h = 0.0;           ///< post-adjustment step
    double cost_raw = 0.0;    ///< cycles / h
    double cost_scaled = 0.0; ///< cost_raw * stage_cost_factor(stages)
    double error = 0.0;       ///< bench-cost: error; bench-time: error / t
    bool conjugate_alternating = false;
};

/// Descending log-spaced grid with the given number of points per decade.
std::vector<double> log_grid(double h_min, double h_max, int points_per_decade);

/// Nearest step to h that divides t into a whole number of steps.
double adjust_step(double t, double h);

SpinChainConfig make_model(const std::string& model, int sites, std::uint64_t seed);

struct CostBenchParams {
    std::string model = "xz";
    Arrangement arrangement{Arrangement::S2};
    std::vector<std::string> schemes;  ///< catalog names and/or "taylor"
    double t = 10.0;
    double h_min = 5e-4;
    double h_max = 2.0;
    int points_per_decade = 24;
    int sites = 6;
    std::uint64_t seed = 0;
    /// unset: conjugate alternation on for non-unitary schemes, off otherwise
    std::optional<bool> conjugate_alternating;
};

/// Fixed-t experiment: error as a function of cost over the h grid.
std::vector<BenchRecord> run_bench_cost(const CostBenchParams& params);

struct TimeBenchParams {
    std::string model = "xz";
    Arrangement arrangement{Arrangement::S2};
    std::vector<std::string> schemes;
    std::vector<double> t_grid;
    double matched_cost = 50.0;  ///< target scaled cost for every scheme
    int sites = 6;
    std::uint64_t seed = 0;
    std::optional<bool> conjugate_alternating;
};

/// Matched-cost experiment: error per unit time as a function of t; each
/// scheme runs at the step that gives it the same scaled cost.
std::vector<BenchRecord> run_bench_time(const TimeBenchParams& params);

/// Fixed column set; numbers carry 17 significant digits so identical runs
/// are byte-identical and values round-trip.
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

/// Least-squares slope of log(error) against log(h) over the largest cost
/// decade whose errors lie inside [floor, ceiling]; returns nullopt when
/// fewer than three usable points exist. Used for order-scaling checks.
std::optional<double> fit_order_slope(const std::vector<double>& h,
                                      const std::vector<double>& error,
                                      double floor = 1e-10, double ceiling = 0.05);

}  // namespace trotterkit::bench
