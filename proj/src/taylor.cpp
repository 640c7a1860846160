#include "trotterkit/taylor.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace trotterkit {

double spectral_bound(const SpinChainConfig& config) {
    double gamma = config.sites * (std::abs(config.jx) + std::abs(config.jy) +
                                   std::abs(config.jz));
    for (double hi : config.fields) gamma += std::abs(hi);
    return gamma;
}

int choose_cutoff(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("choose_cutoff: epsilon must lie in (0, 1)");
    double tail = 1.0;  // 1/(k+1)! running value
    for (int k = 1; k <= 200; ++k) {
        tail /= static_cast<double>(k + 1);
        if (tail < epsilon) return k;
    }
    throw std::invalid_argument("choose_cutoff: epsilon too small");
}

int cutoff_for_step(double gamma_h, double epsilon) {
    if (gamma_h > TaylorPlan::kMaxGammaH)
        throw std::invalid_argument("taylor: gamma*h = " + format_g17(gamma_h) +
                                    " exceeds " + format_g17(TaylorPlan::kMaxGammaH) +
                                    "; choose a smaller step");
    const int floor_k = choose_cutoff(epsilon);
    double tail = 1.0;  // (gamma_h)^{k+1}/(k+1)!
    for (int k = 1; k <= 400; ++k) {
        tail *= gamma_h / static_cast<double>(k + 1);
        if (tail < epsilon) return std::max(k, floor_k);
    }
    throw std::invalid_argument("cutoff_for_step: no admissible cutoff");
}

TaylorPlan TaylorPlan::make(const SpinChainConfig& config, double epsilon) {
    TaylorPlan plan;
    plan.gamma = spectral_bound(config);
    plan.h = 1.0 / plan.gamma;
    plan.cutoff = choose_cutoff(epsilon);
    plan.epsilon = epsilon;
    return plan;
}

void taylor_step(StateVector& state, const SpinChainConfig& config, double h, int k) {
    if (k < 1) throw std::invalid_argument("taylor_step: cutoff must be at least 1");
    const std::size_t n = state.size();
    StateVector term = state;
    StateVector scratch(n);
    for (int j = 1; j <= k; ++j) {
        apply_hamiltonian(config, term.data(), scratch.data());
        const Complex factor = Complex{0.0, h / static_cast<double>(j)};
        for (std::size_t s = 0; s < n; ++s) {
            term[s] = factor * scratch[s];
            state[s] += term[s];
        }
    }
}

double taylor_error(const SpinChainConfig& config, double h, double t, int k,
                    [[maybe_unused]] Execution exec) {
    const long long steps = step_count(t, h);
    const DenseOperator u = exact_propagator(build_hamiltonian(config), t);
    const std::int64_t n = static_cast<std::int64_t>(config.dim());
    std::vector<double> col_sq(static_cast<std::size_t>(n), 0.0);

#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::int64_t col = 0; col < n; ++col) {
        StateVector v = basis_state(static_cast<std::size_t>(n), static_cast<std::size_t>(col));
        for (long long step = 0; step < steps; ++step) taylor_step(v, config, h, k);
        double sum = 0.0;
        for (std::int64_t s = 0; s < n; ++s)
            sum += std::norm(u(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(col)) -
                             v[static_cast<std::size_t>(s)]);
        col_sq[static_cast<std::size_t>(col)] = sum;
    }
    double total = 0.0;
    for (double x : col_sq) total += x;
    return std::sqrt(total / static_cast<double>(n));
}

double taylor_error_for_time(const SpinChainConfig& config, double t, double epsilon,
                             Execution exec) {
    const double gamma = spectral_bound(config);
    const auto steps = static_cast<long long>(std::ceil(t * gamma - 1e-12));
    const double h = t / static_cast<double>(std::max<long long>(steps, 1));
    const int k = cutoff_for_step(gamma * h, epsilon);
    return taylor_error(config, h, t, k, exec);
}

}  // namespace trotterkit
