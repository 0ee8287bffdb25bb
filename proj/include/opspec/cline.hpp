#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opspec/matrix.hpp"

namespace opspec {

/// Pair (A, B) with A^k B^k A^k = A^{k+1}.
struct ConstraintPair {
    ExactMatrix a;
    ExactMatrix b;
    std::size_t k = 1;
    std::string family;
    std::uint64_t seed = 0;

    bool satisfies_constraint() const;
    ExactMatrix bk_ak() const { return b.pow(k) * a.pow(k); }
};

/// Candidate inverse data (T, TA = AT, TAT = T, residual ATA - A).
struct GDInverseData {
    ExactMatrix t;
    bool commutes = false;
    bool inner = false;
    ExactMatrix residual;
    bool residual_nilpotent = false;

    static GDInverseData from(const ExactMatrix& a, const ExactMatrix& t);
};

struct IdentityCheck {
    std::string name;
    bool pass = false;
    bool asserted = true;      ///< informational checks never fail a report
    ExactMatrix residual;      ///< lhs - rhs when the check failed
};

struct IdentityReport {
    std::string construction;
    std::vector<IdentityCheck> checks;
    std::vector<std::pair<std::string, std::string>> notes;

    bool ok() const;
    void add(std::string name, const ExactMatrix& lhs, const ExactMatrix& rhs, bool asserted = true);
    void add_flag(std::string name, bool pass, bool asserted = true);
};

/// B((AB)^D)^2 A; throws Error("identity-violated") if it differs from drazin(BA).
ExactMatrix cline_classic(const ExactMatrix& a, const ExactMatrix& b);

struct GenClineResult {
    ExactMatrix bkak_drazin;   ///< B^k (A^D)^2 A^k
    ExactMatrix a_drazin;      ///< A^k ((B^kA^k)^D)^{k+1}
    std::size_t index_a = 0;
    std::size_t index_bkak = 0;
};

/// Both generalized Cline identities, each checked against an independent
/// Drazin computation. Throws Error("constraint-violated") / Error("identity-violated").
GenClineResult gen_cline(const ConstraintPair& p);

/// Forward construction S = B^k T^2 A^k, Q = I - AT for an inverse T of A.
IdentityReport gdm_forward(const ConstraintPair& p, const GDInverseData& inv);

/// Converse construction S' = A^k T'^{k+1} for an inverse T' of B^k A^k.
IdentityReport gdm_converse(const ConstraintPair& p, const GDInverseData& inv);

/// Families: solve_k1, invertible_root, nilpotent, mixed. Deterministic in seed.
ConstraintPair generate_pair(std::size_t k, const std::string& family, std::uint64_t seed);
/// invertible_root with an explicit root N: A = N^{-k}, B = N^{k-1}.
ConstraintPair invertible_root_pair(std::size_t k, const ExactMatrix& root);

const std::vector<std::string>& pair_families();

}  // namespace opspec
