#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trotterkit/free_algebra.hpp"
#include "trotterkit/rng.hpp"

using namespace trotterkit;

namespace {

constexpr int D = 6;

FreeAlgebraElement random_element(SplitMix64& rng, int cap, bool zero_const = true) {
    FreeAlgebraElement e(cap);
    for (int len = zero_const ? 1 : 0; len <= cap; ++len)
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits)
            e.add_term(Word::from_code((1u << len) | bits),
                       Complex{rng.next_unit() - 0.5, rng.next_unit() - 0.5});
    return e;
}

double distance(const FreeAlgebraElement& x, const FreeAlgebraElement& y) {
    return (x - y).norm();
}

}  // namespace

TEST_CASE("words encode, concatenate and print") {
    CHECK(Word{}.length() == 0);
    CHECK(Word::letter('A').str() == "A");
    CHECK(Word::letter('B').str() == "B");
    CHECK(Word::parse("ABBA").length() == 4);
    CHECK(Word::parse("AB").concat(Word::parse("BA")).str() == "ABBA");
    CHECK(Word::parse("ABBA").concat(Word{}) == Word::parse("ABBA"));
    CHECK_THROWS_AS(Word::letter('C'), std::invalid_argument);
}

TEST_CASE("product is concatenation with truncation") {
    const auto A = FreeAlgebraElement::generator(D, 'A');
    const auto B = FreeAlgebraElement::generator(D, 'B');
    SUBCASE("A * B = word AB") {
        const auto p = A * B;
        CHECK(p.coefficient(Word::parse("AB")) == Complex{1.0});
        CHECK(p.terms().size() == 1);
    }
    SUBCASE("(1+A)(1+B) = 1 + A + B + AB") {
        const auto one = FreeAlgebraElement::one(D);
        const auto p = (one + A) * (one + B);
        CHECK(p.coefficient(Word{}) == Complex{1.0});
        CHECK(p.coefficient(Word::parse("A")) == Complex{1.0});
        CHECK(p.coefficient(Word::parse("B")) == Complex{1.0});
        CHECK(p.coefficient(Word::parse("AB")) == Complex{1.0});
        CHECK(p.terms().size() == 4);
    }
    SUBCASE("identity element") {
        SplitMix64 rng(3);
        const auto x = random_element(rng, D, false);
        CHECK(distance(x * FreeAlgebraElement::one(D), x) == 0.0);
        CHECK(distance(FreeAlgebraElement::one(D) * x, x) == 0.0);
    }
    SUBCASE("degree caps must match") {
        CHECK_THROWS_AS(FreeAlgebraElement::one(3) * FreeAlgebraElement::one(4),
                        std::invalid_argument);
    }
}

TEST_CASE("product is associative and distributive on random elements") {
    SplitMix64 rng(11);
    for (int round = 0; round < 5; ++round) {
        const auto x = random_element(rng, D, false);
        const auto y = random_element(rng, D, false);
        const auto z = random_element(rng, D, false);
        CHECK(distance((x * y) * z, x * (y * z)) <= 1e-13);
        CHECK(distance(x * (y + z), x * y + x * z) <= 1e-13);
        CHECK(distance((x + y) * z, x * z + y * z) <= 1e-13);
    }
}

TEST_CASE("exponential") {
    const auto A = FreeAlgebraElement::generator(D, 'A');
    SUBCASE("exp(0) = 1") {
        const auto e = exp(FreeAlgebraElement(D));
        CHECK(distance(e, FreeAlgebraElement::one(D)) == 0.0);
    }
    SUBCASE("exp(hA) coefficients are h^k/k!") {
        const Complex h{0.3, 0.0};
        const auto e = exp(h * A);
        CHECK(std::abs(e.coefficient(Word::parse("AA")) - h * h / 2.0) <= 1e-16);
        CHECK(std::abs(e.coefficient(Word::parse("AAA")) - h * h * h / 6.0) <= 1e-16);
    }
    SUBCASE("exp(A) exp(-A) = 1") {
        const auto p = exp(A) * exp(Complex{-1.0} * A);
        CHECK(distance(p, FreeAlgebraElement::one(D)) <= 1e-15);
    }
    SUBCASE("nonzero constant term is rejected") {
        CHECK_THROWS_AS(exp(FreeAlgebraElement::one(D)), std::invalid_argument);
    }
}

TEST_CASE("logarithm") {
    const auto A = FreeAlgebraElement::generator(D, 'A');
    const auto B = FreeAlgebraElement::generator(D, 'B');
    SUBCASE("log(1) = 0") {
        CHECK(log(FreeAlgebraElement::one(D)).terms().empty());
    }
    SUBCASE("leading BCH commutator of log(exp(A)exp(B))") {
        const auto l = log(exp(A) * exp(B));
        CHECK(std::abs(l.coefficient(Word::parse("AB")) - 0.5) <= 1e-15);
        CHECK(std::abs(l.coefficient(Word::parse("BA")) + 0.5) <= 1e-15);
    }
    SUBCASE("log(exp(x)) = x") {
        const auto x = Complex{0.3} * A + Complex{0.7} * B;
        CHECK(distance(log(exp(x)), x) <= 1e-15);
    }
    SUBCASE("exp(log(p)) = p on random products of exponentials") {
        SplitMix64 rng(19);
        for (int round = 0; round < 5; ++round) {
            const auto x = Complex{0.2 * rng.next_unit(), 0.2 * rng.next_unit()} * A +
                           Complex{0.2 * rng.next_unit(), 0.2 * rng.next_unit()} * B;
            const auto y = Complex{0.2 * rng.next_unit()} * A + Complex{0.2 * rng.next_unit()} * B;
            const auto p = exp(x) * exp(y);
            CHECK(distance(exp(log(p)), p) <= 1e-13);
        }
    }
    SUBCASE("round trip at the default error degree") {
        FreeAlgebraElement x(7);
        x += Complex{0.3} * FreeAlgebraElement::generator(7, 'A');
        x += Complex{0.7} * FreeAlgebraElement::generator(7, 'B');
        CHECK(distance(log(exp(x)), x) <= 1e-12);
    }
    SUBCASE("constant term away from 1 is rejected") {
        CHECK_THROWS_AS(log(FreeAlgebraElement(D)), std::invalid_argument);
        CHECK_THROWS_AS(log(Complex{2.0} * FreeAlgebraElement::one(D)), std::invalid_argument);
    }
}

TEST_CASE("pruning keeps the term map free of exact zeros") {
    const auto A = FreeAlgebraElement::generator(D, 'A');
    auto x = A;
    x -= A;
    CHECK(x.terms().empty());
}
