#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>

#include "opspec/drazin.hpp"
#include "opspec/error.hpp"
#include "opspec/operator.hpp"

namespace opspec {

namespace {

/// Continued-fraction convergents of x with denominators up to 10^7.
std::vector<Rational> convergents(double x) {
    std::vector<Rational> out;
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    out.emplace_back(h, k);
    for (int depth = 0; depth < 24 && frac > 1e-12; ++depth) {
        double inv = 1.0 / frac;
        auto a = static_cast<long>(std::floor(inv));
        frac = inv - static_cast<double>(a);
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        if (k_next > 10000000) break;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        Rational q(h, k);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::complex<double> to_complex(const GaussianRational& z) { return {z.re().get_d(), z.im().get_d()}; }

}  // namespace

std::vector<EigenData> certified_eigenvalues(const ExactMatrix& m) {
    if (!m.square() || m.rows() == 0) throw Error("shape-mismatch", "eigenvalues need a non-empty square matrix");
    const std::size_t n = m.rows();
    Eigen::MatrixXcd approx(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            approx(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_complex(m(i, j));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(approx, false);
    if (solver.info() != Eigen::Success) throw Error("unsupported-atom", "eigenvalue iteration failed");

    std::vector<GaussianRational> found;
    auto is_eigenvalue = [&](const GaussianRational& mu) {
        return (m - mu * ExactMatrix::identity(n)).rank() < n;
    };
    for (Eigen::Index idx = 0; idx < solver.eigenvalues().size(); ++idx) {
        std::complex<double> guess = solver.eigenvalues()[idx];
        // Numeric guesses of defective eigenvalues are only accurate to about eps^(1/n).
        double tol = std::max(1e-6, 4 * std::pow(1e-15, 1.0 / static_cast<double>(n))) * std::max(1.0, std::abs(guess));
        auto close = [&](const GaussianRational& z) { return std::abs(to_complex(z) - guess) < tol; };
        if (std::any_of(found.begin(), found.end(), close)) continue;
        auto res = convergents(guess.real());
        auto ims = convergents(guess.imag());
        bool done = false;
        for (std::size_t depth = 0; depth < std::max(res.size(), ims.size()) && !done; ++depth)
            for (std::size_t a = 0; a <= depth && !done; ++a)
                for (std::size_t b = 0; b <= depth && !done; ++b) {
                    if (std::max(a, b) != depth || a >= res.size() || b >= ims.size()) continue;
                    GaussianRational mu(res[a], ims[b]);
                    if (!close(mu)) continue;
                    if (std::find(found.begin(), found.end(), mu) == found.end() && is_eigenvalue(mu)) {
                        found.push_back(mu);
                        done = true;
                    }
                }
    }
    std::vector<EigenData> out;
    std::size_t total = 0;
    for (const auto& mu : found) {
        ExactMatrix shifted = m - mu * ExactMatrix::identity(n);
        EigenData d;
        d.value = mu;
        d.algebraic = n - shifted.pow(n).rank();
        d.geometric = n - shifted.rank();
        d.index = drazin_index(shifted);
        total += d.algebraic;
        out.push_back(d);
    }
    if (total != n)
        throw Error("unsupported-atom",
                    "characteristic polynomial does not split over the Gaussian rationals for " + m.str());
    std::sort(out.begin(), out.end(), [](const EigenData& a, const EigenData& b) { return a.value < b.value; });
    return out;
}

}  // namespace opspec
