#pragma once

#include <array>
#include <vector>

#include "trotterkit/free_algebra.hpp"
#include "trotterkit/scheme.hpp"

namespace trotterkit {

/// Result of projecting a homogeneous error part onto the commutator basis
/// of its degree. residual is the Euclidean distance between the part and
/// its reconstruction from the basis; for genuine splitting errors it sits
/// at rounding level because BCH logarithms are Lie elements.
struct ErrorProjection {
    std::vector<Complex> coefficients;
    double residual = 0.0;
};

/// Leading-order error data of a scheme: the degree-1 validity defects
/// (nu-1, sigma-1), the degree-3 pair (alpha, beta) and the degree-5
/// vector (gamma_1..gamma_6) in the fixed commutator-basis ordering.
struct ErrorCoefficients {
    Complex nu;
    Complex sigma;
    Complex alpha;
    Complex beta;
    std::array<Complex, 6> gamma;
    double residual_deg1 = 0.0;
    double residual_deg3 = 0.0;
    double residual_deg5 = 0.0;
};

constexpr int kDefaultErrorDegree = 7;

/// log( prod_i exp(a_i A) exp(b_i B) ) - (A + B), truncated at max_degree.
/// The coefficient of a degree-k word is the h^k error coefficient of one
/// step. Requires max_degree >= scheme.order + 1.
FreeAlgebraElement scheme_error_element(const SplittingScheme& scheme,
                                        int max_degree = kDefaultErrorDegree);

/// Least-squares projection of the degree-homogeneous part of err onto the
/// commutator basis for degree 1, 3 or 5. Returns (nu-1, sigma-1), (alpha,
/// beta) or (gamma_1..gamma_6) respectively.
ErrorProjection project_error(const FreeAlgebraElement& err, int degree);

ErrorCoefficients error_coefficients(const SplittingScheme& scheme,
                                     int max_degree = kDefaultErrorDegree);

/// Omelyan-style efficiency: 1/(q^2 |(alpha, beta)|) for order 2 and
/// 1/(q^4 |gamma|) for order 4. Orders >= 6 are unsupported.
double efficiency(const SplittingScheme& scheme);

}  // namespace trotterkit
