#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trotterkit/scheme.hpp"
#include "trotterkit/spin_chain.hpp"

namespace trotterkit {

/// How to split the chain Hamiltonian into stages.
///   s2:  (all x bonds)(all z bonds)            -- XZ model only
///   s2l: (x_1 z_1 x_2 z_2 ... x_L z_L)         -- XZ model only
///   s3:  (all x)(all y)(all z)
///   s3l: (x_1 y_1 z_1 ... x_L y_L z_L)
struct Arrangement {
    enum Tag { S2, S2L, S3, S3L } tag = S3;

    int stage_count(int sites) const;
    bool needs_xz() const { return tag == S2 || tag == S2L; }
    std::string str() const;  // "s2", "s2l", "s3", "s3l"
    static Arrangement parse(const std::string& text);
};

enum class Axis { x, y, z };

enum class Execution { serial, parallel };

/// exp(i coeff h H^a_i) on one bond (site, site+1 mod L).
/// H^z_i carries the local field h_i; x and y bonds are field-free.
void apply_bond_gate(StateVector& state, Axis axis, int site, Complex coeff,
                     double h, const SpinChainConfig& config);

/// One grouped stage: bond gates for every site in ascending order (they
/// commute, so the order only matters at rounding level).
void apply_stage_gates(StateVector& state, Axis axis, Complex coeff, double h,
                       const SpinChainConfig& config);

/// Precompiled gate sequence for one time step S(h): q cycles of a forward
/// ramp with c_i followed by a backward ramp with d_i, stage order fixed by
/// the arrangement. Gate constants (complex trig/phase factors) are baked in
/// at construction.
class StepPlan {
  public:
    StepPlan(const SplittingScheme& scheme, Arrangement arrangement,
             const SpinChainConfig& config, double h);

    void apply(StateVector& state) const;
    std::size_t gate_count() const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    std::size_t dim_;
};

/// Applies one step of the splitting to the state (convenience wrapper; use
/// StepPlan directly when stepping many times).
void splitting_step(StateVector& state, const SplittingScheme& scheme,
                    Arrangement arrangement, double h, const SpinChainConfig& config);

/// Direct two-stage execution of the a/b form (x stage = A, z stage = B);
/// requires Jy = 0. Agrees with the c/d ramp execution by the telescope
/// identities.
void two_stage_step_ab(StateVector& state, const SplittingScheme& scheme, double h,
                       const SpinChainConfig& config);

/// Number of whole steps for the evolution time t at step h; rejects
/// non-integer t/h beyond a 1e-9 tolerance.
long long step_count(double t, double h);

/// Normalised Frobenius distance between exp(iHt) and S(h)^{t/h},
///   error = sqrt( sum_j |U e_j - S^{t/h} e_j|^2 / N ),
/// evaluated by successive application over the computational basis.
/// With conjugate_alternating every second step uses the conjugated scheme.
double trotter_error(const SpinChainConfig& config, const SplittingScheme& scheme,
                     Arrangement arrangement, double h, double t,
                     bool conjugate_alternating = false,
                     Execution exec = Execution::parallel);

/// trotter_error re-evaluated with long-double state vectors and an
/// extended-precision exact propagator. Lowers the rounding floor by about
/// three decades; used where the double floor masks asymptotic order
/// scaling (the deep high-order compositions).
double trotter_error_extended(const SpinChainConfig& config, const SplittingScheme& scheme,
                              Arrangement arrangement, double h, double t,
                              Execution exec = Execution::parallel);

/// || S^dagger S - 1 ||_F / sqrt(N) for S = S(h)^{t/h}; zero up to rounding
/// for real-coefficient schemes.
double unitarity_deviation(const SpinChainConfig& config, const SplittingScheme& scheme,
                           Arrangement arrangement, double h, double t,
                           Execution exec = Execution::parallel);

}  // namespace trotterkit
