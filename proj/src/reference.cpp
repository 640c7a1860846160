#include "trotterkit/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trotterkit::reference {

DenseOperator matrix_exp_series(const DenseOperator& m) {
    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int squarings = 0;
    double scale = 1.0;
    while (norm * scale > 0.5) {
        scale *= 0.5;
        ++squarings;
    }
    const DenseOperator scaled = scale * m;
    DenseOperator sum = DenseOperator::Identity(m.rows(), m.cols());
    DenseOperator term = sum;
    for (int k = 1; k <= 60; ++k) {
        term = (scaled * term) / static_cast<double>(k);
        sum += term;
        if (term.norm() < 1e-18 * sum.norm()) break;
    }
    for (int k = 0; k < squarings; ++k) sum = sum * sum;
    return sum;
}

DenseOperator stage_hamiltonian(const SpinChainConfig& config, Axis axis, int site) {
    const int L = config.sites;
    const std::size_t n = config.dim();
    DenseOperator h = DenseOperator::Zero(static_cast<Eigen::Index>(n),
                                          static_cast<Eigen::Index>(n));
    const int first = site < 0 ? 0 : site;
    const int last = site < 0 ? L - 1 : site;
    for (std::size_t s = 0; s < n; ++s) {
        for (int i = first; i <= last; ++i) {
            const int j = (i + 1) % L;
            const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
            const double szi = ((s >> i) & 1u) ? -1.0 : 1.0;
            const double szj = ((s >> j) & 1u) ? -1.0 : 1.0;
            switch (axis) {
                case Axis::x:
                    h(static_cast<Eigen::Index>(s ^ mask), static_cast<Eigen::Index>(s)) += config.jx;
                    break;
                case Axis::y:
                    h(static_cast<Eigen::Index>(s ^ mask), static_cast<Eigen::Index>(s)) +=
                        config.jy * (szi == szj ? -1.0 : 1.0);
                    break;
                case Axis::z:
                    h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) +=
                        config.jz * szi * szj + config.fields[static_cast<std::size_t>(i)] * szi;
                    break;
            }
        }
    }
    return h;
}

namespace {

// (axis, site) forward stage sequence for one ramp. Stages of the grouped
// arrangements are the whole-axis sums (site -1), so the dense route never
// assumes the per-bond factorisation the kernels rely on.
std::vector<std::pair<Axis, int>> ramp_stage_sequence(Arrangement arrangement, int sites) {
    std::vector<std::pair<Axis, int>> fwd;
    const bool with_y = !arrangement.needs_xz();
    if (arrangement.tag == Arrangement::S2L || arrangement.tag == Arrangement::S3L) {
        for (int i = 0; i < sites; ++i) {
            fwd.emplace_back(Axis::x, i);
            if (with_y) fwd.emplace_back(Axis::y, i);
            fwd.emplace_back(Axis::z, i);
        }
    } else {
        fwd.emplace_back(Axis::x, -1);
        if (with_y) fwd.emplace_back(Axis::y, -1);
        fwd.emplace_back(Axis::z, -1);
    }
    return fwd;
}

}  // namespace

DenseOperator dense_step_operator(const SplittingScheme& scheme, Arrangement arrangement,
                                  const SpinChainConfig& config, double h) {
    if (arrangement.needs_xz() && config.jy != 0.0)
        throw std::invalid_argument("arrangement " + arrangement.str() +
                                    " requires the XZ model (Jy = 0)");
    const StageCoefficients sc = to_stage_coefficients(scheme);
    const std::size_t n = config.dim();
    const auto fwd = ramp_stage_sequence(arrangement, config.sites);
    auto bwd = fwd;
    std::reverse(bwd.begin(), bwd.end());

    const Complex iu{0.0, 1.0};
    DenseOperator step = DenseOperator::Identity(static_cast<Eigen::Index>(n),
                                                 static_cast<Eigen::Index>(n));
    auto apply_ramp = [&](const std::vector<std::pair<Axis, int>>& stages, Complex coeff) {
        for (const auto& [axis, site] : stages) {
            const DenseOperator gate =
                matrix_exp_series(iu * coeff * h * stage_hamiltonian(config, axis, site));
            step = gate * step;  // applied after everything accumulated so far
        }
    };
    for (std::size_t i = 0; i < sc.c.size(); ++i) {
        apply_ramp(fwd, sc.c[i]);
        apply_ramp(bwd, sc.d[i]);
    }
    return step;
}

double trotter_error_dense(const SpinChainConfig& config, const SplittingScheme& scheme,
                           Arrangement arrangement, double h, double t,
                           bool conjugate_alternating) {
    const long long steps = step_count(t, h);
    const DenseOperator step = dense_step_operator(scheme, arrangement, config, h);
    const DenseOperator conj_step =
        conjugate_alternating
            ? dense_step_operator(conjugate_alternate(scheme, 1), arrangement, config, h)
            : step;
    const std::size_t n = config.dim();
    DenseOperator total = DenseOperator::Identity(static_cast<Eigen::Index>(n),
                                                  static_cast<Eigen::Index>(n));
    for (long long k = 0; k < steps; ++k)
        total = ((conjugate_alternating && k % 2 == 1) ? conj_step : step) * total;
    const DenseOperator u = exact_propagator(build_hamiltonian(config), t);
    return (u - total).norm() / std::sqrt(static_cast<double>(n));
}

}  // namespace trotterkit::reference
