#include "trotterkit/free_algebra.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace trotterkit {

Word Word::letter(char c) {
    if (c == 'A') return Word(0b10u);
    if (c == 'B') return Word(0b11u);
    throw std::invalid_argument("Word::letter: alphabet is {A, B}");
}

Word Word::parse(const std::string& s) {
    Word w;
    for (char c : s) w = w.concat(letter(c));
    return w;
}

int Word::length() const {
    return 31 - std::countl_zero(code_);
}

Word Word::concat(Word rhs) const {
    const int len = length();
    const int rlen = rhs.length();
    if (len + rlen > kMaxLength)
        throw std::length_error("Word::concat: word too long");
    const std::uint32_t bits = code_ & ((1u << len) - 1u);
    const std::uint32_t rbits = rhs.code_ & ((1u << rlen) - 1u);
    return Word((1u << (len + rlen)) | bits | (rbits << len));
}

std::string Word::str() const {
    const int len = length();
    std::string s(static_cast<std::size_t>(len), 'A');
    for (int k = 0; k < len; ++k)
        if ((code_ >> k) & 1u) s[static_cast<std::size_t>(k)] = 'B';
    return s.empty() ? "1" : s;
}

FreeAlgebraElement::FreeAlgebraElement(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 1 || max_degree > Word::kMaxLength)
        throw std::invalid_argument("FreeAlgebraElement: unsupported max degree");
}

FreeAlgebraElement FreeAlgebraElement::one(int max_degree) {
    FreeAlgebraElement e(max_degree);
    e.terms_[Word{}] = 1.0;
    return e;
}

FreeAlgebraElement FreeAlgebraElement::generator(int max_degree, char letter) {
    FreeAlgebraElement e(max_degree);
    e.terms_[Word::letter(letter)] = 1.0;
    return e;
}

Complex FreeAlgebraElement::coefficient(Word w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void FreeAlgebraElement::add_term(Word w, Complex coeff) {
    if (w.length() > max_degree_) return;
    terms_[w] += coeff;
    prune(w);
}

void FreeAlgebraElement::prune(Word w) {
    auto it = terms_.find(w);
    if (it != terms_.end() && std::abs(it->second) < kPruneThreshold) terms_.erase(it);
}

FreeAlgebraElement& FreeAlgebraElement::operator+=(const FreeAlgebraElement& rhs) {
    if (rhs.max_degree_ != max_degree_)
        throw std::invalid_argument("free algebra: mismatched degree caps");
    for (const auto& [w, c] : rhs.terms_) {
        terms_[w] += c;
        prune(w);
    }
    return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator-=(const FreeAlgebraElement& rhs) {
    if (rhs.max_degree_ != max_degree_)
        throw std::invalid_argument("free algebra: mismatched degree caps");
    for (const auto& [w, c] : rhs.terms_) {
        terms_[w] -= c;
        prune(w);
    }
    return *this;
}

FreeAlgebraElement& FreeAlgebraElement::operator*=(Complex scalar) {
    if (scalar == Complex{0.0, 0.0}) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= scalar;
    return *this;
}

double FreeAlgebraElement::norm() const {
    double s = 0.0;
    for (const auto& [w, c] : terms_) s += std::norm(c);
    return std::sqrt(s);
}

double FreeAlgebraElement::degree_norm(int k) const {
    double s = 0.0;
    for (const auto& [w, c] : terms_)
        if (w.length() == k) s += std::norm(c);
    return std::sqrt(s);
}

FreeAlgebraElement operator+(FreeAlgebraElement lhs, const FreeAlgebraElement& rhs) {
    lhs += rhs;
    return lhs;
}

FreeAlgebraElement operator-(FreeAlgebraElement lhs, const FreeAlgebraElement& rhs) {
    lhs -= rhs;
    return lhs;
}

FreeAlgebraElement operator*(Complex scalar, FreeAlgebraElement x) {
    x *= scalar;
    return x;
}

FreeAlgebraElement operator*(const FreeAlgebraElement& lhs, const FreeAlgebraElement& rhs) {
    if (lhs.max_degree() != rhs.max_degree())
        throw std::invalid_argument("free algebra: mismatched degree caps");
    const int cap = lhs.max_degree();
    FreeAlgebraElement out(cap);
    for (const auto& [u, cu] : lhs.terms()) {
        const int remaining = cap - u.length();
        for (const auto& [v, cv] : rhs.terms()) {
            if (v.length() > remaining) break;  // map is ordered by length first
            out.add_term(u.concat(v), cu * cv);
        }
    }
    return out;
}

FreeAlgebraElement exp(const FreeAlgebraElement& x) {
    if (x.coefficient(Word{}) != Complex{0.0, 0.0})
        throw std::invalid_argument("free algebra exp: nonzero constant term");
    const int cap = x.max_degree();
    FreeAlgebraElement acc = FreeAlgebraElement::one(cap);
    FreeAlgebraElement power = FreeAlgebraElement::one(cap);
    double factorial = 1.0;
    for (int k = 1; k <= cap; ++k) {
        power = power * x;  // minimum degree >= k
        if (power.terms().empty()) break;
        factorial *= k;
        acc += Complex{1.0 / factorial, 0.0} * power;
    }
    return acc;
}

FreeAlgebraElement log(const FreeAlgebraElement& x) {
    if (x.coefficient(Word{}) != Complex{1.0, 0.0})
        throw std::invalid_argument("free algebra log: constant term must equal 1");
    const int cap = x.max_degree();
    FreeAlgebraElement y = x - FreeAlgebraElement::one(cap);
    FreeAlgebraElement acc(cap);
    FreeAlgebraElement power = FreeAlgebraElement::one(cap);
    for (int k = 1; k <= cap; ++k) {
        power = power * y;
        if (power.terms().empty()) break;
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        acc += Complex{sign / k, 0.0} * power;
    }
    return acc;
}

FreeAlgebraElement commutator(const FreeAlgebraElement& x, const FreeAlgebraElement& y) {
    return x * y - y * x;
}

}  // namespace trotterkit
