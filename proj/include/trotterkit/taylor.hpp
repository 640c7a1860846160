#pragma once

#include "trotterkit/gates.hpp"
#include "trotterkit/spin_chain.hpp"

namespace trotterkit {

/// Step and cutoff choice for the truncated-Taylor propagator. With
/// h = 1/gamma every eigenvalue of Hh has modulus <= 1 and the tail of the
/// series is bounded by 1/(k+1)!.
struct TaylorPlan {
    double gamma = 0.0;    ///< upper bound on |lambda_max(H)|
    double h = 0.0;        ///< 1/gamma
    int cutoff = 0;        ///< series truncation k
    double epsilon = 0.0;  ///< target relative precision

    static TaylorPlan make(const SpinChainConfig& config,
                           double epsilon = kDefaultEpsilon);

    static constexpr double kDefaultEpsilon = 2.220446049250313e-16;  // DBL_EPSILON
    /// Steps with gamma*h beyond this amplify rounding and are refused.
    static constexpr double kMaxGammaH = 1.5;
};

/// Triangle-inequality bound L*(|Jx|+|Jy|+|Jz|) + sum_i |h_i| on the
/// spectral radius of the chain Hamiltonian.
double spectral_bound(const SpinChainConfig& config);

/// Smallest k with 1/(k+1)! < epsilon (the tail bound at gamma*h = 1).
int choose_cutoff(double epsilon);

/// Smallest k with (gamma_h)^{k+1}/(k+1)! < epsilon, never below
/// choose_cutoff(epsilon); rejects gamma_h > TaylorPlan::kMaxGammaH.
int cutoff_for_step(double gamma_h, double epsilon);

/// state <- sum_{j=0..k} (iHh)^j/j! state, by iterated application of H.
void taylor_step(StateVector& state, const SpinChainConfig& config, double h, int k);

/// Normalised Frobenius distance between exp(iHt) and the k-truncated
/// Taylor evolution with t/h steps (t/h must be an integer within 1e-9).
double taylor_error(const SpinChainConfig& config, double h, double t, int k,
                    Execution exec = Execution::parallel);

/// Plan-driven evolution over exactly t: the step count is rounded up from
/// t*gamma so gamma*h stays <= 1, then the plan cutoff is applied.
/// Returns the Frobenius error against exact diagonalisation.
double taylor_error_for_time(const SpinChainConfig& config, double t,
                             double epsilon = TaylorPlan::kDefaultEpsilon,
                             Execution exec = Execution::parallel);

}  // namespace trotterkit
