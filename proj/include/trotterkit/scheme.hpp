#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace trotterkit {

using Complex = std::complex<double>;

/// A symmetric (palindromic) splitting scheme in the two-operator form
///
///   exp((A+B)h) ~ exp(a_1 A h) exp(b_1 B h) ... exp(b_q B h) exp(a_{q+1} A h)
///
/// with sum(a) = sum(b) = 1. The single-step error is O(h^{order+1}).
struct SplittingScheme {
    std::string name;
    int order = 0;           ///< even n
    int cycles = 0;          ///< q
    std::vector<Complex> a;  ///< q+1 entries, equal to their reverse
    std::vector<Complex> b;  ///< q entries, equal to their reverse

    /// True iff every coefficient has an exactly zero imaginary part.
    bool unitary() const;

    /// Throws std::invalid_argument naming the violated invariant.
    void validate() const;
};

/// Per-cycle ramp coefficients for splitting into any number of stages:
/// q forward ramps with c_i interleaved with q backward ramps with d_i.
struct StageCoefficients {
    std::vector<Complex> c;
    std::vector<Complex> d;
};

/// Mirrors the leading halves of the coefficient lists into full palindromic
/// lists of lengths q+1 and q. half_a must have ceil((q+1)/2) entries and
/// half_b ceil(q/2); middle entries are not duplicated in the halves.
std::pair<std::vector<Complex>, std::vector<Complex>>
symmetric_complete(const std::vector<Complex>& half_a,
                   const std::vector<Complex>& half_b, int cycles);

/// c_1 = a_1, d_1 = b_1 - c_1, c_i = a_i - d_{i-1}, d_i = b_i - c_i.
/// The ramp form reproduces the two-stage form through the telescope
/// identities c_i + d_{i-1} = a_i and d_i + c_i = b_i (with d_0 = 0).
StageCoefficients to_stage_coefficients(const SplittingScheme& scheme);

/// Raises a symmetric order-n scheme to order n+2 by the composition
///   S_{n+2}(h) = S_n(s h)^p S_n((1-2ps)h) S_n(s h)^p,
///   s = 1 / (2p - (2p)^{1/(n+1)}).
/// Touching boundary a-coefficients of adjacent copies are merged, so the
/// result has (2p+1)*q cycles and is again symmetric.
SplittingScheme suzuki_compose(const SplittingScheme& scheme, int p);

/// For odd step_index returns the scheme with every coefficient complex
/// conjugated, for even step_index returns it unchanged. Conjugating every
/// second time step keeps non-unitary schemes near-unitary over long runs.
SplittingScheme conjugate_alternate(const SplittingScheme& scheme,
                                    long long step_index);

/// Relative computational cost of an s-stage splitting: (s-1)/s.
double stage_cost_factor(int num_stages);

/// Scheme file format: {"name": str, "order": int, "cycles": int,
/// "a": [[re, im], ...], "b": [[re, im], ...]} with full coefficient lists
/// and numbers written with 17 significant digits.
std::string scheme_to_json(const SplittingScheme& scheme);
SplittingScheme scheme_from_json(const std::string& text);

/// "%.17g" formatting used everywhere a double crosses a text boundary.
std::string format_g17(double value);

}  // namespace trotterkit
