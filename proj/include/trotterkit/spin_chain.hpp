#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "trotterkit/scheme.hpp"

namespace trotterkit {

using StateVector = std::vector<Complex>;
using DenseOperator = Eigen::MatrixXcd;

/// Periodic spin-1/2 chain
///   H = sum_i ( Jx sx_i sx_{i+1} + Jy sy_i sy_{i+1} + Jz sz_i sz_{i+1}
///               + h_i sz_i ),  site L+1 == site 1.
/// Site i maps to bit i of the basis index; bit 0 means sz = +1.
struct SpinChainConfig {
    int sites = 6;
    double jx = 1.0;
    double jy = 1.0;
    double jz = 1.0;
    std::vector<double> fields;  ///< per-site z fields h_i, |h_i| <= 0.1
    std::uint64_t seed = 0;

    std::size_t dim() const { return std::size_t{1} << sites; }

    /// XZ model: Jx = Jz = 1, Jy = 0, fields sampled from the seed.
    static SpinChainConfig xz(int sites, std::uint64_t seed);
    /// XXZ model: Jx = Jy = Jz = 1, fields sampled from the seed.
    static SpinChainConfig xxz(int sites, std::uint64_t seed);
};

/// Deterministic per-site fields, uniform in [-0.1, 0.1]. Pipeline (bit-exact
/// across platforms): SplitMix64(seed), u64 -> (u >> 11) * 2^-53 -> affine.
std::vector<double> sample_fields(std::uint64_t seed, int sites);

DenseOperator build_hamiltonian(const SpinChainConfig& config);

/// U = exp(+i H t) through a Hermitian eigendecomposition.
DenseOperator exact_propagator(const DenseOperator& hamiltonian, double t);

/// Matrix-free out = H * in for states of dimension 2^L.
void apply_hamiltonian(const SpinChainConfig& config, const Complex* in, Complex* out);

/// Basis state |j>.
StateVector basis_state(std::size_t dim, std::size_t index);

double state_norm(const StateVector& v);

}  // namespace trotterkit
