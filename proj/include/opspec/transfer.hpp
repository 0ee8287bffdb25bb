#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opspec/operator.hpp"

namespace opspec {

/// A meromorphic: acc sigma(A) <= {0} and every nonzero spectral point is a pole.
bool is_meromorphic(const ExprPtr& e);

struct TransferReport {
    std::size_t k = 1;
    ExprPtr product;                ///< B^k A^k as a diagonal expression
    std::size_t blocks = 0;         ///< aligned diagonal blocks checked
    bool a_meromorphic = false;
    bool product_meromorphic = false;
    bool holds() const { return a_meromorphic == product_meromorphic; }
};

/// A and B are diagonal atoms or direct sums of them with the same block
/// layout. Throws Error("unsupported-pair") when a block product leaves the
/// certified families and Error("constraint-violated") when some diagonal
/// entry breaks a^k b^k a^k = a^{k+1}.
TransferReport verify_meromorphic_transfer(const ExprPtr& a, const ExprPtr& b, std::size_t k);

/// Deterministic certified diagonal pairs for a given k (at least ten).
std::vector<std::pair<ExprPtr, ExprPtr>> certified_diagonal_pairs(std::size_t k);

}  // namespace opspec
