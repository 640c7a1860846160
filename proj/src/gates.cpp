#include "trotterkit/gates.hpp"

#include <cmath>
#include <cstdint>
#include <memory>
#include <stdexcept>

namespace trotterkit {

int Arrangement::stage_count(int sites) const {
    switch (tag) {
        case S2: return 2;
        case S2L: return 2 * sites;
        case S3: return 3;
        case S3L: return 3 * sites;
    }
    return 0;
}

std::string Arrangement::str() const {
    switch (tag) {
        case S2: return "s2";
        case S2L: return "s2l";
        case S3: return "s3";
        case S3L: return "s3l";
    }
    return "";
}

Arrangement Arrangement::parse(const std::string& text) {
    if (text == "s2") return {S2};
    if (text == "s2l") return {S2L};
    if (text == "s3") return {S3};
    if (text == "s3l") return {S3L};
    throw std::invalid_argument("unknown arrangement '" + text + "'; expected s2, s2l, s3 or s3l");
}

namespace {

void check_compatible(Arrangement arrangement, const SpinChainConfig& config) {
    if (arrangement.needs_xz() && config.jy != 0.0)
        throw std::invalid_argument("arrangement " + arrangement.str() +
                                    " requires the XZ model (Jy = 0)");
    if (config.fields.size() != static_cast<std::size_t>(config.sites))
        throw std::invalid_argument("spin chain: fields must have one entry per site");
}

// Stage sequence of one forward ramp, as (axis, site) bond gates. For the
// grouped arrangements each axis block is one stage; its gates commute.
std::vector<std::pair<Axis, int>> forward_stages(Arrangement arrangement, int sites) {
    std::vector<std::pair<Axis, int>> st;
    const bool with_y = !arrangement.needs_xz();
    switch (arrangement.tag) {
        case Arrangement::S2:
        case Arrangement::S3:
            for (int i = 0; i < sites; ++i) st.emplace_back(Axis::x, i);
            if (with_y)
                for (int i = 0; i < sites; ++i) st.emplace_back(Axis::y, i);
            for (int i = 0; i < sites; ++i) st.emplace_back(Axis::z, i);
            break;
        case Arrangement::S2L:
        case Arrangement::S3L:
            for (int i = 0; i < sites; ++i) {
                st.emplace_back(Axis::x, i);
                if (with_y) st.emplace_back(Axis::y, i);
                st.emplace_back(Axis::z, i);
            }
            break;
    }
    return st;
}

// Backward ramps reverse the stage order. Grouped stages keep their
// site-ascending gate order; the local arrangements reverse gate by gate.
std::vector<std::pair<Axis, int>> backward_stages(Arrangement arrangement, int sites) {
    std::vector<std::pair<Axis, int>> st;
    const bool with_y = !arrangement.needs_xz();
    switch (arrangement.tag) {
        case Arrangement::S2:
        case Arrangement::S3:
            for (int i = 0; i < sites; ++i) st.emplace_back(Axis::z, i);
            if (with_y)
                for (int i = 0; i < sites; ++i) st.emplace_back(Axis::y, i);
            for (int i = 0; i < sites; ++i) st.emplace_back(Axis::x, i);
            break;
        case Arrangement::S2L:
        case Arrangement::S3L: {
            auto fwd = forward_stages(arrangement, sites);
            st.assign(fwd.rbegin(), fwd.rend());
            break;
        }
    }
    return st;
}

// The kernels are templated on the real type so the acceptance checks can
// rerun them in extended precision where the double rounding floor would
// mask the asymptotics (the q=125 order-8 scheme needs this).
template <typename R>
struct GateOpT {
    enum class Kind : unsigned char { xy, z } kind;
    std::size_t mask_i = 0;
    std::size_t mask_j = 0;
    std::complex<R> c[4];  // xy: diag, off_same, off_diff, -; z: 4 phases
};

template <typename R>
void push_gate(std::vector<GateOpT<R>>& ops, Axis axis, int site, std::complex<R> theta,
               const SpinChainConfig& config) {
    using C = std::complex<R>;
    const int i = site;
    const int j = (site + 1) % config.sites;
    GateOpT<R> op;
    op.mask_i = std::size_t{1} << i;
    op.mask_j = std::size_t{1} << j;
    if (axis == Axis::z) {
        op.kind = GateOpT<R>::Kind::z;
        const R jz = static_cast<R>(config.jz);
        const R hi = static_cast<R>(config.fields[static_cast<std::size_t>(i)]);
        const C iu{R{0}, R{1}};
        // phase index = bit_i | (bit_j << 1); bit 0 means sz = +1
        op.c[0] = std::exp(iu * theta * (jz + hi));
        op.c[1] = std::exp(iu * theta * (-jz - hi));
        op.c[2] = std::exp(iu * theta * (-jz + hi));
        op.c[3] = std::exp(iu * theta * (jz - hi));
    } else {
        const double coupling = axis == Axis::x ? config.jx : config.jy;
        if (coupling == 0.0) return;  // exact identity
        op.kind = GateOpT<R>::Kind::xy;
        const C phi = theta * static_cast<R>(coupling);
        const C isin = C{R{0}, R{1}} * std::sin(phi);
        op.c[0] = std::cos(phi);
        op.c[1] = axis == Axis::y ? -isin : isin;  // pair bits equal
        op.c[2] = isin;                            // pair bits differ
        op.c[3] = C{R{0}, R{0}};
    }
    ops.push_back(op);
}

template <typename R>
std::vector<GateOpT<R>> build_step_ops(const SplittingScheme& scheme, Arrangement arrangement,
                                       const SpinChainConfig& config, double h) {
    using C = std::complex<R>;
    check_compatible(arrangement, config);
    scheme.validate();

    // telescope recurrence in working precision
    const std::size_t q = scheme.b.size();
    std::vector<C> c(q), d(q);
    C prev_d{R{0}, R{0}};
    for (std::size_t i = 0; i < q; ++i) {
        const C ai{static_cast<R>(scheme.a[i].real()), static_cast<R>(scheme.a[i].imag())};
        const C bi{static_cast<R>(scheme.b[i].real()), static_cast<R>(scheme.b[i].imag())};
        c[i] = ai - prev_d;
        d[i] = bi - c[i];
        prev_d = d[i];
    }

    const auto fwd = forward_stages(arrangement, config.sites);
    const auto bwd = backward_stages(arrangement, config.sites);
    std::vector<GateOpT<R>> ops;
    ops.reserve(2 * q * fwd.size());
    const R hr = static_cast<R>(h);
    for (std::size_t i = 0; i < q; ++i) {
        for (const auto& [axis, site] : fwd) push_gate(ops, axis, site, c[i] * hr, config);
        for (const auto& [axis, site] : bwd) push_gate(ops, axis, site, d[i] * hr, config);
    }
    return ops;
}

template <typename R>
void apply_step_ops(const std::vector<GateOpT<R>>& ops, std::complex<R>* v, std::size_t n) {
    using C = std::complex<R>;
    for (const auto& op : ops) {
        if (op.kind == GateOpT<R>::Kind::xy) {
            const std::size_t flip = op.mask_i | op.mask_j;
            const C diag = op.c[0];
            for (std::size_t s = 0; s < n; ++s) {
                if (s & op.mask_i) continue;
                const std::size_t p = s ^ flip;
                const C off = (s & op.mask_j) ? op.c[2] : op.c[1];
                const C v0 = v[s];
                const C v1 = v[p];
                v[s] = diag * v0 + off * v1;
                v[p] = diag * v1 + off * v0;
            }
        } else {
            for (std::size_t s = 0; s < n; ++s) {
                const unsigned idx = (s & op.mask_i ? 1u : 0u) | (s & op.mask_j ? 2u : 0u);
                v[s] *= op.c[idx];
            }
        }
    }
}

}  // namespace

struct StepPlan::Impl {
    std::vector<GateOpT<double>> ops;
};

StepPlan::StepPlan(const SplittingScheme& scheme, Arrangement arrangement,
                   const SpinChainConfig& config, double h)
    : dim_(config.dim()) {
    auto impl = std::make_shared<Impl>();
    impl->ops = build_step_ops<double>(scheme, arrangement, config, h);
    impl_ = std::move(impl);
}

void StepPlan::apply(StateVector& state) const {
    apply_step_ops(impl_->ops, state.data(), dim_);
}

std::size_t StepPlan::gate_count() const { return impl_->ops.size(); }

void apply_bond_gate(StateVector& state, Axis axis, int site, Complex coeff,
                     double h, const SpinChainConfig& config) {
    std::vector<GateOpT<double>> ops;
    push_gate(ops, axis, site, coeff * h, config);
    apply_step_ops(ops, state.data(), state.size());
}

void apply_stage_gates(StateVector& state, Axis axis, Complex coeff, double h,
                       const SpinChainConfig& config) {
    for (int site = 0; site < config.sites; ++site)
        apply_bond_gate(state, axis, site, coeff, h, config);
}

void splitting_step(StateVector& state, const SplittingScheme& scheme,
                    Arrangement arrangement, double h, const SpinChainConfig& config) {
    StepPlan(scheme, arrangement, config, h).apply(state);
}

void two_stage_step_ab(StateVector& state, const SplittingScheme& scheme, double h,
                       const SpinChainConfig& config) {
    if (config.jy != 0.0)
        throw std::invalid_argument("two_stage_step_ab requires the XZ model (Jy = 0)");
    for (std::size_t i = 0; i < scheme.b.size(); ++i) {
        apply_stage_gates(state, Axis::x, scheme.a[i], h, config);
        apply_stage_gates(state, Axis::z, scheme.b[i], h, config);
    }
    apply_stage_gates(state, Axis::x, scheme.a.back(), h, config);
}

long long step_count(double t, double h) {
    if (!(h > 0.0) || !(t > 0.0))
        throw std::invalid_argument("step_count: need positive t and h");
    const double ratio = t / h;
    const long long steps = std::llround(ratio);
    if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9)
        throw std::invalid_argument("step_count: t/h = " + format_g17(ratio) +
                                    " is not an integer within 1e-9");
    return steps;
}

namespace {

// Columns of S(h)^{t/h} against the columns of a target operator; the shared
// evolution loop behind trotter_error and unitarity_deviation. Each basis
// column evolves independently, which is where the parallelism lives.
template <typename PerColumn>
void evolve_columns(const SpinChainConfig& config, const SplittingScheme& scheme,
                    Arrangement arrangement, double h, long long steps,
                    bool conjugate_alternating, [[maybe_unused]] Execution exec,
                    PerColumn&& per_column) {
    const StepPlan plan(scheme, arrangement, config, h);
    const StepPlan conj_plan(conjugate_alternate(scheme, 1), arrangement, config, h);
    const std::int64_t n = static_cast<std::int64_t>(config.dim());

#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::int64_t col = 0; col < n; ++col) {
        StateVector v = basis_state(static_cast<std::size_t>(n), static_cast<std::size_t>(col));
        for (long long step = 0; step < steps; ++step) {
            if (conjugate_alternating && (step % 2 == 1))
                conj_plan.apply(v);
            else
                plan.apply(v);
        }
        per_column(static_cast<std::size_t>(col), v);
    }
}

}  // namespace

double trotter_error(const SpinChainConfig& config, const SplittingScheme& scheme,
                     Arrangement arrangement, double h, double t,
                     bool conjugate_alternating, Execution exec) {
    const long long steps = step_count(t, h);
    const DenseOperator u = exact_propagator(build_hamiltonian(config), t);
    const std::size_t n = config.dim();
    std::vector<double> col_sq(n, 0.0);
    evolve_columns(config, scheme, arrangement, h, steps, conjugate_alternating, exec,
                   [&](std::size_t col, const StateVector& v) {
                       double sum = 0.0;
                       for (std::size_t s = 0; s < n; ++s)
                           sum += std::norm(u(static_cast<Eigen::Index>(s),
                                              static_cast<Eigen::Index>(col)) -
                                            v[s]);
                       col_sq[col] = sum;
                   });
    double total = 0.0;
    for (double x : col_sq) total += x;  // fixed order keeps runs bit-identical
    return std::sqrt(total / static_cast<double>(n));
}

double trotter_error_extended(const SpinChainConfig& config, const SplittingScheme& scheme,
                              Arrangement arrangement, double h, double t,
                              [[maybe_unused]] Execution exec) {
    using CLD = std::complex<long double>;
    using MatrixLD = Eigen::Matrix<CLD, Eigen::Dynamic, Eigen::Dynamic>;
    check_compatible(arrangement, config);
    const long long steps = step_count(t, h);
    const std::int64_t n = static_cast<std::int64_t>(config.dim());

    // exact propagator in extended precision; the double version would
    // pollute the comparison at the error levels this path is used for
    MatrixLD hamiltonian = MatrixLD::Zero(n, n);
    {
        const DenseOperator hd = build_hamiltonian(config);
        for (std::int64_t r = 0; r < n; ++r)
            for (std::int64_t c = 0; c < n; ++c)
                hamiltonian(r, c) = CLD{static_cast<long double>(hd(r, c).real()),
                                        static_cast<long double>(hd(r, c).imag())};
    }
    Eigen::SelfAdjointEigenSolver<MatrixLD> es(hamiltonian);
    MatrixLD u = es.eigenvectors();
    {
        Eigen::Matrix<CLD, Eigen::Dynamic, 1> phases(n);
        for (std::int64_t k = 0; k < n; ++k)
            phases(k) = std::exp(CLD{0.0L, es.eigenvalues()(k) * static_cast<long double>(t)});
        u = u * phases.asDiagonal() * es.eigenvectors().adjoint();
    }

    const auto ops = build_step_ops<long double>(scheme, arrangement, config, h);
    std::vector<long double> col_sq(static_cast<std::size_t>(n), 0.0L);

#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
    for (std::int64_t col = 0; col < n; ++col) {
        std::vector<CLD> v(static_cast<std::size_t>(n), CLD{0.0L, 0.0L});
        v[static_cast<std::size_t>(col)] = CLD{1.0L, 0.0L};
        for (long long step = 0; step < steps; ++step)
            apply_step_ops(ops, v.data(), static_cast<std::size_t>(n));
        long double sum = 0.0L;
        for (std::int64_t s = 0; s < n; ++s) {
            const CLD diff = u(s, col) - v[static_cast<std::size_t>(s)];
            sum += diff.real() * diff.real() + diff.imag() * diff.imag();
        }
        col_sq[static_cast<std::size_t>(col)] = sum;
    }
    long double total = 0.0L;
    for (long double x : col_sq) total += x;
    return static_cast<double>(std::sqrt(total / static_cast<long double>(n)));
}

double unitarity_deviation(const SpinChainConfig& config, const SplittingScheme& scheme,
                           Arrangement arrangement, double h, double t, Execution exec) {
    const long long steps = step_count(t, h);
    const std::size_t n = config.dim();
    DenseOperator s_matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    evolve_columns(config, scheme, arrangement, h, steps, false, exec,
                   [&](std::size_t col, const StateVector& v) {
                       for (std::size_t s = 0; s < n; ++s)
                           s_matrix(static_cast<Eigen::Index>(s),
                                    static_cast<Eigen::Index>(col)) = v[s];
                   });
    const DenseOperator gram = s_matrix.adjoint() * s_matrix;
    const DenseOperator eye = DenseOperator::Identity(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
    return (gram - eye).norm() / std::sqrt(static_cast<double>(n));
}

}  // namespace trotterkit
