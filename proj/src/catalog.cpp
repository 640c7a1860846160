#include "trotterkit/catalog.hpp"

#include <map>
#include <stdexcept>

namespace trotterkit {

namespace {

SplittingScheme make_scheme(std::string name, int order, int cycles,
                            std::vector<Complex> half_a, std::vector<Complex> half_b) {
    SplittingScheme s;
    s.name = std::move(name);
    s.order = order;
    s.cycles = cycles;
    std::tie(s.a, s.b) = symmetric_complete(half_a, half_b, cycles);
    s.validate();
    return s;
}

SplittingScheme compose_as(std::string name, const SplittingScheme& base, int p) {
    SplittingScheme s = suzuki_compose(base, p);
    s.name = std::move(name);
    return s;
}

// Derived entries (the "1 - 2*sum" style closures) are computed from the
// quoted literals at registration time so the sums hit 1 at machine precision.
std::map<std::string, SplittingScheme> build_catalog() {
    std::map<std::string, SplittingScheme> cat;
    auto put = [&cat](SplittingScheme s) { cat.emplace(s.name, std::move(s)); };

    // Verlet / leapfrog
    put(make_scheme("verlet", 2, 1, {0.5}, {1.0}));

    // Omelyan, most efficient n=2
    {
        const double a1 = 0.1931833275037836;
        put(make_scheme("omelyan-2", 2, 2, {a1, 1.0 - 2.0 * a1}, {0.5}));
    }

    // Forest-Ruth, the minimal-cycle 4th order
    {
        const double a1 = 0.6756035959798288;
        const double b1 = 1.351207191959658;
        put(make_scheme("forest-ruth", 4, 3, {a1, 0.5 - a1}, {b1, 1.0 - 2.0 * b1}));
    }

    // Omelyan's Forest-Ruth-type, optimal real n=4 with q=4
    {
        const double a1 = 0.1720865590295143;
        const double b1 = 0.5915620307551568;
        const double a2 = -0.1616217622107222;
        put(make_scheme("omelyan-fr-type", 4, 4, {a1, a2, 1.0 - 2.0 * (a1 + a2)},
                        {b1, 0.5 - b1}));
    }

    // Omelyan's variant tuned for one operator being small: it zeroes the
    // error commutator with the fewest A factors instead of the norm.
    {
        const double a1 = 0.5316386245813512;
        const double b1 = -0.04375142191737413;
        const double a2 = -0.3086019704406066;
        put(make_scheme("omelyan-small-a", 4, 4, {a1, a2, 1.0 - 2.0 * (a1 + a2)},
                        {b1, 0.5 - b1}));
    }

    // Complex-coefficient n=4 with q=4
    {
        const Complex a1{0.09957801119428374, 0.02359386141367452};
        const Complex b1{0.2596218597573501, 0.08909472525370253};
        const Complex a2{0.2520542187700347, 0.09826170579213035};
        put(make_scheme("non-unitary-q4", 4, 4, {a1, a2, 1.0 - 2.0 * (a1 + a2)},
                        {b1, 0.5 - b1}));
    }

    // Suzuki's n=4 (fractal construction written out)
    {
        const double a1 = 0.2072453858971879;
        const double a2 = 0.4144907717943757;
        const double b1 = 0.4144907717943757;
        const double b2 = 0.4144907717943757;
        put(make_scheme("suzuki-4", 4, 5, {a1, a2, 0.5 - (a1 + a2)},
                        {b1, b2, 1.0 - 2.0 * (b1 + b2)}));
    }

    // Highest-efficiency unitary n=4 with q=5
    {
        const double a1 = 0.09257547473195787;
        const double b1 = 0.2540996315529392;
        const double a2 = 0.4627160310210738;
        const double b2 = -0.1676517240119692;
        put(make_scheme("optimised-4", 4, 5, {a1, a2, 0.5 - (a1 + a2)},
                        {b1, b2, 1.0 - 2.0 * (b1 + b2)}));
    }

    // Complex-coefficient n=4 with q=5, most efficient 4th order known
    {
        const Complex a1{0.07613272445178274, -0.03518797331257356};
        const Complex b1{0.1658339349217486, -0.07090293766092534};
        const Complex a2{0.2017183745725757, 0.02597491015915232};
        const Complex b2{0.2137425142256234, 0.1386193640914034};
        put(make_scheme("non-unitary-q5", 4, 5, {a1, a2, 0.5 - (a1 + a2)},
                        {b1, b2, 1.0 - 2.0 * (b1 + b2)}));
    }

    // Complex n=4 with constant real parts of the sub-steps
    {
        const Complex a1{0.1, 0.02523113193557069};
        const Complex b1{0.2, 0.05046226387114138};
        const Complex a2{0.2, -0.04082482904638631};
        const Complex b2{0.2, -0.132111921963914};
        put(make_scheme("uniform-non-unitary", 4, 5, {a1, a2, 0.5 - (a1 + a2)},
                        {b1, b2, 1.0 - 2.0 * (b1 + b2)}));
    }

    // Blanes & Moan n=4, q=6
    {
        const double a1 = 0.07920369643119569;
        const double b1 = 0.209515106613362;
        const double a2 = 0.353172906049774;
        const double b2 = -0.143851773179818;
        const double a3 = -0.0420650803577195;
        put(make_scheme("blanes-moan-4", 4, 6, {a1, a2, a3, 1.0 - 2.0 * (a1 + a2 + a3)},
                        {b1, b2, 0.5 - (b1 + b2)}));
    }

    // Blanes & Moan n=6, q=10
    {
        const double a1 = 0.0502627644003922;
        const double b1 = 0.148816447901042;
        const double a2 = 0.413514300428344;
        const double b2 = -0.132385865767784;
        const double a3 = 0.0450798897943977;
        const double b3 = 0.067307604692185;
        const double a4 = -0.188054853819569;
        const double b4 = 0.432666402578175;
        const double a5 = 0.54196067845078;
        put(make_scheme("blanes-moan-6", 6, 10,
                        {a1, a2, a3, a4, a5, 1.0 - 2.0 * (a1 + a2 + a3 + a4 + a5)},
                        {b1, b2, b3, b4, 0.5 - (b1 + b2 + b3 + b4)}));
    }

    // Recursive constructions, p=2 at every level
    put(compose_as("suzuki-6", cat.at("suzuki-4"), 2));
    put(compose_as("bm6-suzuki-8", cat.at("blanes-moan-6"), 2));
    put(compose_as("suzuki-8", cat.at("suzuki-6"), 2));

    for (const auto& [name, s] : cat) s.validate();
    return cat;
}

const std::map<std::string, SplittingScheme>& catalog() {
    static const std::map<std::string, SplittingScheme> cat = build_catalog();
    return cat;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "verlet",         "omelyan-2",      "forest-ruth",
        "omelyan-fr-type", "omelyan-small-a", "non-unitary-q4",
        "suzuki-4",       "optimised-4",    "non-unitary-q5",
        "uniform-non-unitary", "blanes-moan-4", "blanes-moan-6",
        "suzuki-6",       "bm6-suzuki-8",   "suzuki-8",
    };
    return names;
}

const SplittingScheme& get_scheme(const std::string& name) {
    const auto& cat = catalog();
    auto it = cat.find(name);
    if (it == cat.end()) {
        std::string msg = "unknown scheme '" + name + "'; available:";
        for (const auto& n : catalog_names()) msg += " " + n;
        throw std::invalid_argument(msg);
    }
    return it->second;
}

bool is_catalog_scheme(const std::string& name) {
    return catalog().count(name) != 0;
}

}  // namespace trotterkit
