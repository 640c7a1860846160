#include "trotterkit/scheme.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace trotterkit {

namespace {

Complex list_sum(const std::vector<Complex>& v) {
    return std::accumulate(v.begin(), v.end(), Complex{0.0, 0.0});
}

bool is_palindrome(const std::vector<Complex>& v) {
    for (std::size_t i = 0, j = v.size(); i < j; ++i, --j) {
        if (v[i] != v[j - 1]) return false;
    }
    return true;
}

}  // namespace

bool SplittingScheme::unitary() const {
    for (const auto& x : a)
        if (x.imag() != 0.0) return false;
    for (const auto& x : b)
        if (x.imag() != 0.0) return false;
    return true;
}

void SplittingScheme::validate() const {
    if (order <= 0 || order % 2 != 0)
        throw std::invalid_argument("scheme '" + name + "': order must be a positive even integer");
    if (cycles <= 0)
        throw std::invalid_argument("scheme '" + name + "': cycle count must be positive");
    if (a.size() != static_cast<std::size_t>(cycles) + 1)
        throw std::invalid_argument("scheme '" + name + "': a must have cycles+1 entries");
    if (b.size() != static_cast<std::size_t>(cycles))
        throw std::invalid_argument("scheme '" + name + "': b must have cycles entries");
    if (std::abs(list_sum(a) - 1.0) > 1e-14)
        throw std::invalid_argument("scheme '" + name + "': sum(a) != 1 beyond 1e-14");
    if (std::abs(list_sum(b) - 1.0) > 1e-14)
        throw std::invalid_argument("scheme '" + name + "': sum(b) != 1 beyond 1e-14");
    if (!is_palindrome(a))
        throw std::invalid_argument("scheme '" + name + "': a is not equal to its reverse");
    if (!is_palindrome(b))
        throw std::invalid_argument("scheme '" + name + "': b is not equal to its reverse");
}

std::pair<std::vector<Complex>, std::vector<Complex>>
symmetric_complete(const std::vector<Complex>& half_a,
                   const std::vector<Complex>& half_b, int cycles) {
    if (cycles <= 0) throw std::invalid_argument("symmetric_complete: cycles must be positive");
    const std::size_t q = static_cast<std::size_t>(cycles);
    if (half_a.size() != (q + 2) / 2)
        throw std::invalid_argument("symmetric_complete: half_a must have ceil((q+1)/2) entries");
    if (half_b.size() != (q + 1) / 2)
        throw std::invalid_argument("symmetric_complete: half_b must have ceil(q/2) entries");

    std::vector<Complex> a(q + 1), b(q);
    for (std::size_t i = 0; i <= q; ++i) a[i] = half_a[std::min(i, q - i)];
    for (std::size_t i = 0; i < q; ++i) b[i] = half_b[std::min(i, q - 1 - i)];
    return {std::move(a), std::move(b)};
}

StageCoefficients to_stage_coefficients(const SplittingScheme& scheme) {
    scheme.validate();
    const std::size_t q = scheme.b.size();
    StageCoefficients sc;
    sc.c.resize(q);
    sc.d.resize(q);
    Complex prev_d{0.0, 0.0};
    for (std::size_t i = 0; i < q; ++i) {
        sc.c[i] = scheme.a[i] - prev_d;
        sc.d[i] = scheme.b[i] - sc.c[i];
        prev_d = sc.d[i];
    }
    return sc;
}

SplittingScheme suzuki_compose(const SplittingScheme& scheme, int p) {
    scheme.validate();
    if (p < 1) throw std::invalid_argument("suzuki_compose: p must be a positive integer");

    const double two_p = 2.0 * p;
    const double s = 1.0 / (two_p - std::pow(two_p, 1.0 / (scheme.order + 1)));
    const int copies = 2 * p + 1;
    std::vector<double> weight(copies, s);
    weight[p] = 1.0 - two_p * s;

    const std::size_t q = scheme.b.size();
    SplittingScheme out;
    out.name = scheme.name + "+suzuki";
    out.order = scheme.order + 2;
    out.cycles = scheme.cycles * copies;
    out.a.reserve(q * copies + 1);
    out.b.reserve(q * copies);
    for (int j = 0; j < copies; ++j) {
        // merge the trailing a of the previous copy with our leading a
        if (j == 0)
            out.a.push_back(weight[j] * scheme.a[0]);
        else
            out.a.back() += weight[j] * scheme.a[0];
        for (std::size_t i = 1; i <= q; ++i) out.a.push_back(weight[j] * scheme.a[i]);
        for (std::size_t i = 0; i < q; ++i) out.b.push_back(weight[j] * scheme.b[i]);
    }
    return out;
}

SplittingScheme conjugate_alternate(const SplittingScheme& scheme, long long step_index) {
    if (step_index % 2 == 0) return scheme;
    SplittingScheme out = scheme;
    for (auto& x : out.a) x = std::conj(x);
    for (auto& x : out.b) x = std::conj(x);
    return out;
}

double stage_cost_factor(int num_stages) {
    if (num_stages < 2)
        throw std::invalid_argument("stage_cost_factor: need at least 2 stages");
    return static_cast<double>(num_stages - 1) / static_cast<double>(num_stages);
}

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string scheme_to_json(const SplittingScheme& scheme) {
    auto coeff_array = [](const std::vector<Complex>& v) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ", ";
            os << "[" << format_g17(v[i].real()) << ", " << format_g17(v[i].imag()) << "]";
        }
        os << "]";
        return os.str();
    };
    std::ostringstream os;
    os << "{\n"
       << "  \"name\": " << nlohmann::json(scheme.name).dump() << ",\n"
       << "  \"order\": " << scheme.order << ",\n"
       << "  \"cycles\": " << scheme.cycles << ",\n"
       << "  \"a\": " << coeff_array(scheme.a) << ",\n"
       << "  \"b\": " << coeff_array(scheme.b) << "\n"
       << "}\n";
    return os.str();
}

SplittingScheme scheme_from_json(const std::string& text) {
    SplittingScheme s;
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        auto coeff_list = [&](const char* key) {
            std::vector<Complex> v;
            for (const auto& entry : j.at(key)) {
                if (!entry.is_array() || entry.size() != 2)
                    throw std::invalid_argument(std::string("scheme file: each '") + key +
                                                "' entry must be a [re, im] pair");
                v.emplace_back(entry[0].get<double>(), entry[1].get<double>());
            }
            return v;
        };
        s.name = j.at("name").get<std::string>();
        s.order = j.at("order").get<int>();
        s.cycles = j.at("cycles").get<int>();
        s.a = coeff_list("a");
        s.b = coeff_list("b");
    } catch (const nlohmann::json::exception& e) {
        // the message carries the byte offset of parse failures
        throw std::invalid_argument(std::string("scheme file: ") + e.what());
    }
    s.validate();
    return s;
}

}  // namespace trotterkit
