#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "trotterkit/scheme.hpp"

namespace trotterkit {

/// A word over the two-letter alphabet {A, B}, encoded as (1 << len) | bits
/// with bit k holding the letter at position k (0 = A, 1 = B). Code 1 is the
/// empty word. The marker bit makes every length/bits pair a distinct code
/// and gives a natural ordering by length.
class Word {
  public:
    static constexpr int kMaxLength = 30;

    constexpr Word() : code_(1) {}
    static constexpr Word from_code(std::uint32_t code) { return Word(code); }
    static Word letter(char c);            // 'A' or 'B'
    static Word parse(const std::string&); // e.g. "ABBA"

    int length() const;
    Word concat(Word rhs) const;
    constexpr std::uint32_t code() const { return code_; }
    std::string str() const;

    friend constexpr bool operator==(Word x, Word y) { return x.code_ == y.code_; }
    friend constexpr bool operator<(Word x, Word y) { return x.code_ < y.code_; }

  private:
    explicit constexpr Word(std::uint32_t code) : code_(code) {}
    std::uint32_t code_;
};

/// An element of the free associative algebra on {A, B}, truncated at a fixed
/// maximum word length. Stored sparsely; coefficients with modulus below
/// 1e-300 are pruned.
class FreeAlgebraElement {
  public:
    static constexpr double kPruneThreshold = 1e-300;

    explicit FreeAlgebraElement(int max_degree);
    static FreeAlgebraElement one(int max_degree);
    static FreeAlgebraElement generator(int max_degree, char letter);

    int max_degree() const { return max_degree_; }
    Complex coefficient(Word w) const;
    void add_term(Word w, Complex coeff);
    const std::map<Word, Complex>& terms() const { return terms_; }

    FreeAlgebraElement& operator+=(const FreeAlgebraElement& rhs);
    FreeAlgebraElement& operator-=(const FreeAlgebraElement& rhs);
    FreeAlgebraElement& operator*=(Complex scalar);

    /// Euclidean norm over all stored coefficients.
    double norm() const;
    /// Euclidean norm of the degree-k homogeneous part.
    double degree_norm(int k) const;

  private:
    void prune(Word w);

    int max_degree_;
    std::map<Word, Complex> terms_;
};

FreeAlgebraElement operator+(FreeAlgebraElement lhs, const FreeAlgebraElement& rhs);
FreeAlgebraElement operator-(FreeAlgebraElement lhs, const FreeAlgebraElement& rhs);
FreeAlgebraElement operator*(Complex scalar, FreeAlgebraElement x);

/// Word-concatenation product, truncated at the common max degree.
/// Throws on mismatched degree caps.
FreeAlgebraElement operator*(const FreeAlgebraElement& lhs, const FreeAlgebraElement& rhs);

/// Truncated exponential series; requires a vanishing constant term.
FreeAlgebraElement exp(const FreeAlgebraElement& x);

/// Truncated logarithm; requires a constant term equal to 1.
FreeAlgebraElement log(const FreeAlgebraElement& x);

FreeAlgebraElement commutator(const FreeAlgebraElement& x, const FreeAlgebraElement& y);

}  // namespace trotterkit
