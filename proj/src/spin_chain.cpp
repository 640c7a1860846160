#include "trotterkit/spin_chain.hpp"

#include <cmath>
#include <stdexcept>

#include "trotterkit/rng.hpp"

namespace trotterkit {

std::vector<double> sample_fields(std::uint64_t seed, int sites) {
    SplitMix64 rng(seed);
    std::vector<double> h(static_cast<std::size_t>(sites));
    for (auto& x : h) x = -0.1 + 0.2 * rng.next_unit();
    return h;
}

SpinChainConfig SpinChainConfig::xz(int sites, std::uint64_t seed) {
    SpinChainConfig c;
    c.sites = sites;
    c.jx = 1.0;
    c.jy = 0.0;
    c.jz = 1.0;
    c.fields = sample_fields(seed, sites);
    c.seed = seed;
    return c;
}

SpinChainConfig SpinChainConfig::xxz(int sites, std::uint64_t seed) {
    SpinChainConfig c = xz(sites, seed);
    c.jy = 1.0;
    return c;
}

namespace {

void check_config(const SpinChainConfig& config) {
    if (config.sites < 2)
        throw std::invalid_argument("spin chain: need at least 2 sites");
    if (config.fields.size() != static_cast<std::size_t>(config.sites))
        throw std::invalid_argument("spin chain: fields must have one entry per site");
}

inline double sz_of(std::size_t state, int site) {
    return ((state >> site) & 1u) ? -1.0 : 1.0;
}

}  // namespace

DenseOperator build_hamiltonian(const SpinChainConfig& config) {
    check_config(config);
    const int L = config.sites;
    const std::size_t n = config.dim();
    DenseOperator h = DenseOperator::Zero(static_cast<Eigen::Index>(n),
                                          static_cast<Eigen::Index>(n));
    for (std::size_t s = 0; s < n; ++s) {
        double diag = 0.0;
        for (int i = 0; i < L; ++i) {
            const int j = (i + 1) % L;
            const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
            const double szi = sz_of(s, i);
            const double szj = sz_of(s, j);
            diag += config.jz * szi * szj + config.fields[static_cast<std::size_t>(i)] * szi;
            if (config.jx != 0.0) h(static_cast<Eigen::Index>(s ^ mask), static_cast<Eigen::Index>(s)) += config.jx;
            // <s^mask| sy_i sy_j |s> is -1 when the two bits agree, +1 otherwise
            if (config.jy != 0.0)
                h(static_cast<Eigen::Index>(s ^ mask), static_cast<Eigen::Index>(s)) +=
                    config.jy * (szi == szj ? -1.0 : 1.0);
        }
        h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) += diag;
    }
    return h;
}

DenseOperator exact_propagator(const DenseOperator& hamiltonian, double t) {
    if ((hamiltonian - hamiltonian.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
        throw std::invalid_argument("exact_propagator: Hamiltonian is not Hermitian");
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(hamiltonian);
    const Eigen::VectorXd& ev = es.eigenvalues();
    Eigen::VectorXcd phases(ev.size());
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        phases(k) = std::exp(Complex{0.0, ev(k) * t});
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

void apply_hamiltonian(const SpinChainConfig& config, const Complex* in, Complex* out) {
    check_config(config);
    const int L = config.sites;
    const std::size_t n = config.dim();
    for (std::size_t s = 0; s < n; ++s) out[s] = Complex{0.0, 0.0};
    for (std::size_t s = 0; s < n; ++s) {
        double diag = 0.0;
        for (int i = 0; i < L; ++i) {
            const int j = (i + 1) % L;
            const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
            const double szi = sz_of(s, i);
            const double szj = sz_of(s, j);
            diag += config.jz * szi * szj + config.fields[static_cast<std::size_t>(i)] * szi;
            double flip = config.jx;
            if (config.jy != 0.0) flip += config.jy * (szi == szj ? -1.0 : 1.0);
            if (flip != 0.0) out[s ^ mask] += flip * in[s];
        }
        out[s] += diag * in[s];
    }
}

StateVector basis_state(std::size_t dim, std::size_t index) {
    StateVector v(dim, Complex{0.0, 0.0});
    v[index] = Complex{1.0, 0.0};
    return v;
}

double state_norm(const StateVector& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace trotterkit
