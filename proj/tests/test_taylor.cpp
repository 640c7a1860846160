#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "trotterkit/spin_chain.hpp"
#include "trotterkit/taylor.hpp"

using namespace trotterkit;

TEST_CASE("spectral_bound") {
    SUBCASE("field-free XXZ: L * 3") {
        auto cfg = SpinChainConfig::xxz(6, 0);
        cfg.fields.assign(6, 0.0);
        CHECK(spectral_bound(cfg) == 18.0);
    }
    SUBCASE("L=2 XZ bound is attained by the spectrum") {
        SpinChainConfig c;
        c.sites = 2;
        c.jx = 1.0;
        c.jy = 0.0;
        c.jz = 1.0;
        c.fields = {0.0, 0.0};
        CHECK(spectral_bound(c) == 4.0);
        Eigen::SelfAdjointEigenSolver<DenseOperator> es(build_hamiltonian(c));
        CHECK(es.eigenvalues().cwiseAbs().maxCoeff() <= spectral_bound(c) + 1e-12);
    }
    SUBCASE("fields add their moduli") {
        auto cfg = SpinChainConfig::xxz(6, 0);
        cfg.fields.assign(6, 0.1);
        CHECK(spectral_bound(cfg) == doctest::Approx(18.6).epsilon(1e-15));
    }
    SUBCASE("bound dominates the spectral radius for sampled configs") {
        for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
            const auto cfg = SpinChainConfig::xxz(5, seed);
            Eigen::SelfAdjointEigenSolver<DenseOperator> es(build_hamiltonian(cfg));
            CHECK(es.eigenvalues().cwiseAbs().maxCoeff() <= spectral_bound(cfg));
        }
    }
}

TEST_CASE("choose_cutoff") {
    CHECK(choose_cutoff(0.5) == 2);     // 1/3! < 0.5, 1/2! is not
    CHECK(choose_cutoff(1e-4) == 7);    // 1/8! ~ 2.5e-5
    CHECK(choose_cutoff(std::numeric_limits<double>::epsilon()) == 17);
    CHECK_THROWS_AS(choose_cutoff(0.0), std::invalid_argument);
    CHECK_THROWS_AS(choose_cutoff(1.0), std::invalid_argument);
    // the plan never relaxes the cutoff below the gamma*h = 1 value
    CHECK(cutoff_for_step(0.25, 1e-4) == choose_cutoff(1e-4));
    CHECK(cutoff_for_step(1.5, std::numeric_limits<double>::epsilon()) >= 17);
    CHECK_THROWS_AS(cutoff_for_step(1.6, 1e-8), std::invalid_argument);
}

TEST_CASE("plan construction") {
    const auto cfg = SpinChainConfig::xxz(6, 1);
    const auto plan = TaylorPlan::make(cfg);
    CHECK(plan.gamma == spectral_bound(cfg));
    CHECK(plan.h * plan.gamma == 1.0);
    CHECK(plan.cutoff == 17);
    // tail actually below the target at gamma*h = 1
    double factorial = 1.0;
    for (int k = 1; k <= plan.cutoff + 1; ++k) factorial *= k;
    CHECK(1.0 / factorial < plan.epsilon);
}

TEST_CASE("taylor_step") {
    const auto cfg = SpinChainConfig::xxz(4, 9);
    const std::size_t n = cfg.dim();
    StateVector v0(n);
    for (std::size_t s = 0; s < n; ++s)
        v0[s] = Complex{std::cos(0.2 * static_cast<double>(s)),
                        std::sin(0.5 * static_cast<double>(s))};
    SUBCASE("h=0 is the identity") {
        auto v = v0;
        taylor_step(v, cfg, 0.0, 5);
        for (std::size_t s = 0; s < n; ++s) CHECK(v[s] == v0[s]);
    }
    SUBCASE("k=1 is state + iHh state") {
        auto v = v0;
        taylor_step(v, cfg, 0.01, 1);
        StateVector hv(n);
        apply_hamiltonian(cfg, v0.data(), hv.data());
        for (std::size_t s = 0; s < n; ++s)
            CHECK(std::abs(v[s] - (v0[s] + Complex{0.0, 0.01} * hv[s])) <= 1e-16);
    }
    SUBCASE("k < 1 is rejected") {
        auto v = v0;
        CHECK_THROWS_AS(taylor_step(v, cfg, 0.01, 0), std::invalid_argument);
    }
}

TEST_CASE("plan-level accuracy at L=6, t=10") {
    const auto cfg = SpinChainConfig::xxz(6, 1);
    const double err = taylor_error_for_time(cfg, 10.0);
    CHECK(err <= 1e-12);
}

TEST_CASE("norm drift per step stays at truncation level") {
    const auto cfg = SpinChainConfig::xxz(6, 2);
    const auto plan = TaylorPlan::make(cfg);
    StateVector v = basis_state(cfg.dim(), 5);
    for (int step = 0; step < 50; ++step) {
        taylor_step(v, cfg, plan.h, plan.cutoff);
        CHECK(std::abs(state_norm(v) - 1.0) <= 50 * 10 * plan.epsilon);
    }
}

TEST_CASE("super-exponential convergence in the cutoff") {
    const auto cfg = SpinChainConfig::xxz(5, 3);
    const double gamma = spectral_bound(cfg);
    const double t = 1.0;
    const auto steps = static_cast<long long>(std::ceil(t * gamma));
    const double h = t / static_cast<double>(steps);
    double previous = 0.0;
    for (int k = 3; k <= 11; k += 2) {
        const double err = taylor_error(cfg, h, t, k);
        if (k > 3 && previous > 1e-13) CHECK(err * 50 <= previous);
        previous = err;
    }
}
