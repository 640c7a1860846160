#pragma once

#include "trotterkit/gates.hpp"
#include "trotterkit/spin_chain.hpp"

namespace trotterkit::reference {

/// Plain series matrix exponential with scaling and squaring. Slow and
/// independent of both the closed-form gates and the eigendecomposition
/// propagator; kept as the oracle the fast paths are tested against.
DenseOperator matrix_exp_series(const DenseOperator& m);

/// Dense Hamiltonian of a single stage: one grouped axis term
/// sum_i H^a_i, or a single bond term H^a_i when site >= 0.
DenseOperator stage_hamiltonian(const SpinChainConfig& config, Axis axis, int site = -1);

/// Dense matrix of one splitting step S(h), assembled stage exponential by
/// stage exponential in the same order the state-vector kernels apply them.
DenseOperator dense_step_operator(const SplittingScheme& scheme, Arrangement arrangement,
                                  const SpinChainConfig& config, double h);

/// trotter_error evaluated entirely with dense matrix products.
double trotter_error_dense(const SpinChainConfig& config, const SplittingScheme& scheme,
                           Arrangement arrangement, double h, double t,
                           bool conjugate_alternating = false);

}  // namespace trotterkit::reference
