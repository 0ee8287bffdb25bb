#pragma once

#include <cstdint>
#include <random>

#include "opspec/matrix.hpp"

namespace opspec {

/// Seeded generator whose output is identical on every platform
/// (std distributions are implementation-defined, so we avoid them).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }
    bool coin(unsigned percent) { return uniform(0, 99) < static_cast<long>(percent); }

    GaussianRational entry(long bound, bool complex) {
        GaussianRational re(uniform(-bound, bound));
        if (!complex || !coin(30)) return re;
        return {re.re(), Rational(uniform(-bound, bound))};
    }

    ExactMatrix matrix(std::size_t rows, std::size_t cols, long bound, bool complex = false) {
        ExactMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(bound, complex);
        return m;
    }

    /// Unimodular integer matrix (product of unit triangular factors), so the
    /// inverse has integer entries too.
    ExactMatrix unimodular(std::size_t n, long bound = 1) {
        ExactMatrix l = ExactMatrix::identity(n), u = ExactMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                l(i, j) = uniform(-bound, bound);
                u(j, i) = uniform(-bound, bound);
            }
        return l * u;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace opspec
