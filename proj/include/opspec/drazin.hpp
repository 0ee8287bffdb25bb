#pragma once

#include <cstddef>
#include <utility>

#include "opspec/matrix.hpp"

namespace opspec {

/// Drazin inverse together with the exactly evaluated ring axioms
/// ab = ba, bab = b and a^{r+1} b = a^r.
struct DrazinCertificate {
    ExactMatrix inverse;
    std::size_t index = 0;
    bool commutes = false;
    bool inner = false;
    bool power = false;

    bool ok() const { return commutes && inner && power; }
};

/// Smallest k >= 0 with rank(A^k) = rank(A^{k+1}).
std::size_t drazin_index(const ExactMatrix& a);

/// Drazin inverse via the core-nilpotent splitting C^n = R(A^m) + N(A^m), m = index.
DrazinCertificate drazin(const ExactMatrix& a);

/// Evaluates the three Drazin axioms for a candidate inverse x with exponent r.
DrazinCertificate check_drazin_axioms(const ExactMatrix& a, const ExactMatrix& x, std::size_t r);

/// Drazin inverse when index(A) <= 1; throws Error("index-too-large") otherwise.
ExactMatrix group_inverse(const ExactMatrix& a);

/// (ascent, descent) of lambda I - A; both equal its index for matrices.
std::pair<std::size_t, std::size_t> ascent_descent(const ExactMatrix& a, const GaussianRational& lambda);

}  // namespace opspec
