#include "opspec/drazin.hpp"

#include "opspec/error.hpp"

namespace opspec {

std::size_t drazin_index(const ExactMatrix& a) {
    if (!a.square()) throw Error("shape-mismatch", "index of non-square matrix");
    std::size_t prev_rank = a.rows();
    ExactMatrix p = ExactMatrix::identity(a.rows());
    for (std::size_t k = 0;; ++k) {
        p = p * a;
        std::size_t r = p.rank();
        if (r == prev_rank) return k;
        prev_rank = r;
    }
}

DrazinCertificate check_drazin_axioms(const ExactMatrix& a, const ExactMatrix& x, std::size_t r) {
    DrazinCertificate cert;
    cert.inverse = x;
    cert.index = r;
    cert.commutes = a * x == x * a;
    cert.inner = x * a * x == x;
    ExactMatrix ar = a.pow(r);
    cert.power = ar * a * x == ar;
    return cert;
}

DrazinCertificate drazin(const ExactMatrix& a) {
    std::size_t m = drazin_index(a);
    std::size_t n = a.rows();
    if (m == 0) return check_drazin_axioms(a, a.inverse(), 0);

    ExactMatrix am = a.pow(m);
    ExactMatrix core = am.column_basis();
    ExactMatrix nil = am.kernel_basis();
    std::size_t r = core.cols();
    ExactMatrix x(n, n);
    if (r > 0) {
        ExactMatrix basis = ExactMatrix::hcat(core, nil);
        ExactMatrix basis_inv = basis.inverse();
        ExactMatrix split = basis_inv * a * basis;
        ExactMatrix block = ExactMatrix(n, n);
        block.set_block(0, 0, split.block(0, 0, r, r).inverse());
        x = basis * block * basis_inv;
    }
    return check_drazin_axioms(a, x, m);
}

ExactMatrix group_inverse(const ExactMatrix& a) {
    DrazinCertificate cert = drazin(a);
    if (cert.index > 1)
        throw Error("index-too-large", "group inverse needs index <= 1, got " + std::to_string(cert.index));
    return cert.inverse;
}

std::pair<std::size_t, std::size_t> ascent_descent(const ExactMatrix& a, const GaussianRational& lambda) {
    ExactMatrix shifted = lambda * ExactMatrix::identity(a.rows()) - a;
    std::size_t k = drazin_index(shifted);
    return {k, k};
}

}  // namespace opspec
