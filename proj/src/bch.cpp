#include "trotterkit/bch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace trotterkit {

namespace {

std::vector<FreeAlgebraElement> commutator_basis(int degree) {
    const int cap = degree;
    const auto A = FreeAlgebraElement::generator(cap, 'A');
    const auto B = FreeAlgebraElement::generator(cap, 'B');
    switch (degree) {
        case 1:
            return {A, B};
        case 3: {
            const auto AB = commutator(A, B);
            return {commutator(A, AB), commutator(B, AB)};
        }
        case 5: {
            const auto AB = commutator(A, B);
            const auto AAB = commutator(A, AB);
            const auto BAB = commutator(B, AB);
            return {
                commutator(A, commutator(A, AAB)),
                commutator(A, commutator(A, BAB)),
                commutator(B, commutator(A, AAB)),
                commutator(B, commutator(B, BAB)),
                commutator(B, commutator(B, AAB)),
                commutator(A, commutator(B, BAB)),
            };
        }
        default:
            throw std::invalid_argument("project_error: degree must be 1, 3 or 5");
    }
}

// All words of the given length, ordered by code.
std::vector<Word> words_of_length(int len) {
    std::vector<Word> out;
    out.reserve(1u << len);
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits)
        out.push_back(Word::from_code((1u << len) | bits));
    return out;
}

Eigen::MatrixXd basis_matrix(const std::vector<FreeAlgebraElement>& basis,
                             const std::vector<Word>& words) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(words.size()),
                      static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < words.size(); ++i)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                basis[j].coefficient(words[i]).real();  // commutator expansions are integer
    return m;
}

// The six degree-5 commutators must span a 6-dimensional space; checked once.
void check_basis_independent(const Eigen::MatrixXd& m, int degree) {
    static thread_local bool checked5 = false;
    if (degree != 5 || checked5) return;
    const Eigen::MatrixXd gram = m.transpose() * m;
    if (std::abs(gram.determinant()) <= 1e-10)
        throw std::logic_error("degree-5 commutator basis is not linearly independent");
    checked5 = true;
}

}  // namespace

FreeAlgebraElement scheme_error_element(const SplittingScheme& scheme, int max_degree) {
    scheme.validate();
    // Orders above 6 are certified through degree 7 unless a deeper cap is
    // requested explicitly, so 7 is always an acceptable cap.
    const int needed = std::min(scheme.order + 1, kDefaultErrorDegree);
    if (max_degree < needed)
        throw std::invalid_argument(
            "scheme_error_element: max_degree must be at least order + 1");

    const auto A = FreeAlgebraElement::generator(max_degree, 'A');
    const auto B = FreeAlgebraElement::generator(max_degree, 'B');
    FreeAlgebraElement prod = FreeAlgebraElement::one(max_degree);
    for (std::size_t i = 0; i < scheme.b.size(); ++i) {
        prod = prod * exp(scheme.a[i] * A);
        prod = prod * exp(scheme.b[i] * B);
    }
    prod = prod * exp(scheme.a.back() * A);
    return log(prod) - A - B;
}

ErrorProjection project_error(const FreeAlgebraElement& err, int degree) {
    const auto basis = commutator_basis(degree);
    const auto words = words_of_length(degree);
    const Eigen::MatrixXd m = basis_matrix(basis, words);
    check_basis_independent(m, degree);

    Eigen::VectorXcd e(static_cast<Eigen::Index>(words.size()));
    for (std::size_t i = 0; i < words.size(); ++i)
        e(static_cast<Eigen::Index>(i)) = err.coefficient(words[i]);

    // Normal equations on the tiny real Gram matrix, complex right-hand side.
    const Eigen::MatrixXd gram = m.transpose() * m;
    const Eigen::VectorXcd rhs = m.transpose() * e;
    const auto solver = gram.ldlt();
    const Eigen::VectorXcd g = solver.solve(rhs.real()).cast<Complex>() +
                               Complex{0.0, 1.0} * solver.solve(rhs.imag()).cast<Complex>();

    ErrorProjection out;
    out.coefficients.assign(g.data(), g.data() + g.size());
    out.residual = (m.cast<Complex>() * g - e).norm();
    return out;
}

ErrorCoefficients error_coefficients(const SplittingScheme& scheme, int max_degree) {
    const auto err = scheme_error_element(scheme, max_degree);
    const auto p1 = project_error(err, 1);
    const auto p3 = project_error(err, 3);
    const auto p5 = project_error(err, 5);
    ErrorCoefficients out;
    out.nu = p1.coefficients[0] + 1.0;
    out.sigma = p1.coefficients[1] + 1.0;
    out.alpha = p3.coefficients[0];
    out.beta = p3.coefficients[1];
    for (int j = 0; j < 6; ++j) out.gamma[static_cast<std::size_t>(j)] = p5.coefficients[static_cast<std::size_t>(j)];
    out.residual_deg1 = p1.residual;
    out.residual_deg3 = p3.residual;
    out.residual_deg5 = p5.residual;
    return out;
}

double efficiency(const SplittingScheme& scheme) {
    if (scheme.order != 2 && scheme.order != 4)
        throw std::invalid_argument("efficiency: defined for orders 2 and 4 only");
    const auto err = scheme_error_element(scheme, kDefaultErrorDegree);
    const int degree = scheme.order + 1;
    const auto proj = project_error(err, degree);
    if (proj.residual > 1e-8)
        throw std::runtime_error(
            "efficiency: error part of scheme '" + scheme.name +
            "' is not in the commutator span (residual " + format_g17(proj.residual) + ")");
    double sumsq = 0.0;
    for (const auto& c : proj.coefficients) sumsq += std::norm(c);
    const double q = scheme.cycles;
    const double qpow = scheme.order == 2 ? q * q : q * q * q * q;
    return 1.0 / (qpow * std::sqrt(sumsq));
}

}  // namespace trotterkit
