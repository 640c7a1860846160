#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "trotterkit/catalog.hpp"
#include "trotterkit/rng.hpp"
#include "trotterkit/scheme.hpp"

using namespace trotterkit;

TEST_CASE("symmetric_complete mirrors the halves without duplicating middles") {
    SUBCASE("verlet shape: q=1") {
        auto [a, b] = symmetric_complete({0.5}, {1.0}, 1);
        CHECK(a == std::vector<Complex>{0.5, 0.5});
        CHECK(b == std::vector<Complex>{1.0});
    }
    SUBCASE("omelyan shape: q=2") {
        const double a1 = 0.1931833275037836;
        auto [a, b] = symmetric_complete({a1, 1 - 2 * a1}, {0.5}, 2);
        CHECK(a == std::vector<Complex>{a1, 1 - 2 * a1, a1});
        CHECK(b == std::vector<Complex>{0.5, 0.5});
    }
    SUBCASE("arbitrary halves stay palindromic by construction") {
        SplitMix64 rng(7);
        for (int q = 1; q <= 9; ++q) {
            std::vector<Complex> ha((q + 2) / 2), hb((q + 1) / 2);
            for (auto& x : ha) x = {rng.next_unit(), rng.next_unit()};
            for (auto& x : hb) x = {rng.next_unit(), rng.next_unit()};
            auto [a, b] = symmetric_complete(ha, hb, q);
            REQUIRE(a.size() == static_cast<std::size_t>(q) + 1);
            REQUIRE(b.size() == static_cast<std::size_t>(q));
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == a[a.size() - 1 - i]);
            for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == b[b.size() - 1 - i]);
        }
    }
    SUBCASE("length mismatch is rejected") {
        CHECK_THROWS_AS(symmetric_complete({0.5, 0.5}, {1.0}, 1), std::invalid_argument);
        CHECK_THROWS_AS(symmetric_complete({0.5}, {1.0, 0.5}, 1), std::invalid_argument);
    }
}

TEST_CASE("to_stage_coefficients follows the telescope recurrence") {
    SUBCASE("verlet") {
        auto sc = to_stage_coefficients(get_scheme("verlet"));
        CHECK(sc.c == std::vector<Complex>{0.5});
        CHECK(sc.d == std::vector<Complex>{0.5});
    }
    SUBCASE("omelyan-2 frozen values") {
        auto sc = to_stage_coefficients(get_scheme("omelyan-2"));
        REQUIRE(sc.c.size() == 2);
        CHECK(sc.c[0].real() == doctest::Approx(0.1931833275037836).epsilon(1e-15));
        CHECK(sc.c[1].real() == doctest::Approx(0.3068166724962164).epsilon(1e-15));
        CHECK(sc.d[0].real() == doctest::Approx(0.3068166724962164).epsilon(1e-15));
        CHECK(sc.d[1].real() == doctest::Approx(0.1931833275037836).epsilon(1e-15));
    }
    SUBCASE("telescope identities reconstruct (a, b) for every catalog scheme") {
        for (const auto& name : catalog_names()) {
            const auto& s = get_scheme(name);
            const auto sc = to_stage_coefficients(s);
            Complex prev_d = 0.0;
            for (std::size_t i = 0; i < sc.c.size(); ++i) {
                CHECK(std::abs(sc.c[i] + prev_d - s.a[i]) <= 1e-15);
                CHECK(std::abs(sc.d[i] + sc.c[i] - s.b[i]) <= 1e-15);
                prev_d = sc.d[i];
            }
            // the last backward sub-step closes the step: d_q = a_{q+1}
            CHECK(std::abs(sc.d.back() - s.a.back()) <= 1e-14);
            Complex total = 0.0;
            for (std::size_t i = 0; i < sc.c.size(); ++i) total += sc.c[i] + sc.d[i];
            CHECK(std::abs(total - 1.0) <= 1e-14);
        }
    }
}

TEST_CASE("suzuki_compose") {
    SUBCASE("p must be positive") {
        CHECK_THROWS_AS(suzuki_compose(get_scheme("verlet"), 0), std::invalid_argument);
    }
    SUBCASE("verlet, p=1 gives the forest-ruth coefficients") {
        const auto composed = suzuki_compose(get_scheme("verlet"), 1);
        const auto& fr = get_scheme("forest-ruth");
        REQUIRE(composed.cycles == 3);
        CHECK(composed.order == 4);
        for (std::size_t i = 0; i < fr.a.size(); ++i)
            CHECK(std::abs(composed.a[i] - fr.a[i]) <= 1e-15);
        for (std::size_t i = 0; i < fr.b.size(); ++i)
            CHECK(std::abs(composed.b[i] - fr.b[i]) <= 1e-15);
    }
    SUBCASE("verlet, p=2 gives the suzuki-4 coefficients") {
        const auto composed = suzuki_compose(get_scheme("verlet"), 2);
        const auto& s4 = get_scheme("suzuki-4");
        REQUIRE(composed.cycles == 5);
        for (std::size_t i = 0; i < s4.a.size(); ++i)
            CHECK(std::abs(composed.a[i] - s4.a[i]) <= 1e-15);
        for (std::size_t i = 0; i < s4.b.size(); ++i)
            CHECK(std::abs(composed.b[i] - s4.b[i]) <= 1e-15);
    }
    SUBCASE("blanes-moan-6, p=2 gives an order-8 scheme with 50 cycles") {
        const auto composed = suzuki_compose(get_scheme("blanes-moan-6"), 2);
        CHECK(composed.order == 8);
        CHECK(composed.cycles == 50);
        CHECK_NOTHROW(composed.validate());
    }
    SUBCASE("composition preserves validity and symmetry") {
        for (const auto& name : {"verlet", "omelyan-2", "blanes-moan-4"}) {
            for (int p : {1, 2, 3}) {
                const auto c = suzuki_compose(get_scheme(name), p);
                CHECK_NOTHROW(c.validate());
                Complex sa = 0.0, sb = 0.0;
                for (auto x : c.a) sa += x;
                for (auto x : c.b) sb += x;
                CHECK(std::abs(sa - 1.0) <= 1e-13);
                CHECK(std::abs(sb - 1.0) <= 1e-13);
            }
        }
    }
}

TEST_CASE("conjugate_alternate") {
    const auto& real_scheme = get_scheme("blanes-moan-4");
    SUBCASE("fixes real schemes") {
        const auto c = conjugate_alternate(real_scheme, 1);
        CHECK(c.a == real_scheme.a);
        CHECK(c.b == real_scheme.b);
    }
    SUBCASE("conjugates odd steps of complex schemes") {
        const auto& nu = get_scheme("non-unitary-q4");
        const auto c = conjugate_alternate(nu, 1);
        CHECK(c.a[0] == std::conj(nu.a[0]));
        CHECK(c.a[0] == Complex{0.09957801119428374, -0.02359386141367452});
        CHECK(conjugate_alternate(nu, 2).a == nu.a);
    }
    SUBCASE("involution over two consecutive steps") {
        const auto& nu = get_scheme("non-unitary-q5");
        const auto once = conjugate_alternate(nu, 1);
        const auto twice = conjugate_alternate(once, 1);
        CHECK(twice.a == nu.a);
        CHECK(twice.b == nu.b);
    }
}

TEST_CASE("stage_cost_factor") {
    CHECK(stage_cost_factor(2) == 0.5);
    CHECK(stage_cost_factor(3) == doctest::Approx(2.0 / 3.0));
    CHECK_THROWS_AS(stage_cost_factor(1), std::invalid_argument);
    double prev = 0.0;
    for (int s = 2; s <= 64; ++s) {
        const double f = stage_cost_factor(s);
        CHECK(f > prev);
        CHECK(f < 1.0);
        prev = f;
    }
}

TEST_CASE("scheme json round trip") {
    for (const auto& name : {"verlet", "non-unitary-q5", "blanes-moan-6"}) {
        const auto& s = get_scheme(name);
        const auto parsed = scheme_from_json(scheme_to_json(s));
        CHECK(parsed.name == s.name);
        CHECK(parsed.order == s.order);
        CHECK(parsed.cycles == s.cycles);
        CHECK(parsed.a == s.a);  // 17 significant digits keep doubles bit-exact
        CHECK(parsed.b == s.b);
    }
    SUBCASE("validation failure names the invariant") {
        auto broken = get_scheme("verlet");
        broken.a[0] += 0.25;
        broken.a[1] += 0.25;
        CHECK_THROWS_WITH_AS(scheme_from_json(scheme_to_json(broken)),
                             doctest::Contains("sum(a)"), std::invalid_argument);
    }
    SUBCASE("malformed json is rejected") {
        CHECK_THROWS(scheme_from_json("{\"name\": "));
    }
}
