#include "opspec/cline.hpp"

#include <algorithm>

#include "opspec/drazin.hpp"
#include "opspec/error.hpp"
#include "opspec/random.hpp"

namespace opspec {

bool ConstraintPair::satisfies_constraint() const {
    ExactMatrix ak = a.pow(k);
    return ak * b.pow(k) * ak == ak * a;
}

GDInverseData GDInverseData::from(const ExactMatrix& a, const ExactMatrix& t) {
    GDInverseData d;
    d.t = t;
    d.commutes = t * a == a * t;
    d.inner = t * a * t == t;
    d.residual = a * t * a - a;
    d.residual_nilpotent = d.residual.is_nilpotent();
    return d;
}

bool IdentityReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass || !c.asserted; });
}

void IdentityReport::add(std::string name, const ExactMatrix& lhs, const ExactMatrix& rhs, bool asserted) {
    IdentityCheck c;
    c.name = std::move(name);
    c.pass = lhs == rhs;
    c.asserted = asserted;
    if (!c.pass) c.residual = lhs - rhs;
    checks.push_back(std::move(c));
}

void IdentityReport::add_flag(std::string name, bool pass, bool asserted) {
    IdentityCheck c;
    c.name = std::move(name);
    c.pass = pass;
    c.asserted = asserted;
    checks.push_back(std::move(c));
}

ExactMatrix cline_classic(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix ab_d = drazin(a * b).inverse;
    ExactMatrix result = b * ab_d * ab_d * a;
    ExactMatrix expected = drazin(b * a).inverse;
    if (!(result == expected))
        throw Error("identity-violated", "B((AB)^D)^2A != (BA)^D for A=" + a.str() + " B=" + b.str());
    return result;
}

GenClineResult gen_cline(const ConstraintPair& p) {
    if (!p.satisfies_constraint())
        throw Error("constraint-violated", "A^kB^kA^k != A^{k+1} for k=" + std::to_string(p.k));
    ExactMatrix ak = p.a.pow(p.k);
    ExactMatrix bk = p.b.pow(p.k);
    ExactMatrix bkak = bk * ak;
    DrazinCertificate a_d = drazin(p.a);
    DrazinCertificate bkak_d = drazin(bkak);

    GenClineResult r;
    r.index_a = a_d.index;
    r.index_bkak = bkak_d.index;
    r.bkak_drazin = bk * a_d.inverse * a_d.inverse * ak;
    r.a_drazin = ak * bkak_d.inverse.pow(p.k + 1);
    if (!(r.bkak_drazin == bkak_d.inverse))
        throw Error("identity-violated", "(B^kA^k)^D != B^k(A^D)^2A^k for A=" + p.a.str() + " B=" + p.b.str());
    if (!(r.a_drazin == a_d.inverse))
        throw Error("identity-violated", "A^D != A^k((B^kA^k)^D)^{k+1} for A=" + p.a.str() + " B=" + p.b.str());
    return r;
}

IdentityReport gdm_forward(const ConstraintPair& p, const GDInverseData& inv) {
    if (!inv.commutes || !inv.inner)
        throw Error("invalid-inverse", "forward construction needs TA = AT and TAT = T");
    const std::size_t n = p.a.rows();
    const std::size_t k = p.k;
    const ExactMatrix& a = p.a;
    const ExactMatrix& t = inv.t;
    ExactMatrix ak = a.pow(k), bk = p.b.pow(k);
    ExactMatrix bkak = bk * ak;
    ExactMatrix s = bk * t * t * ak;
    ExactMatrix q = ExactMatrix::identity(n) - a * t;
    ExactMatrix qa = q * a;
    ExactMatrix qak = qa.pow(k);

    IdentityReport rep;
    rep.construction = "forward";
    rep.add("S(B^kA^k) = B^kA^kT", s * bkak, bkak * t);
    rep.add("(B^kA^k)S = B^kA^kT", bkak * s, bkak * t);
    rep.add("S(B^kA^k)S = S", s * bkak * s, s);
    rep.add("Q^2 = Q", q * q, q);
    rep.add("QA = AQ", qa, a * q);
    rep.add("(QA)^kB^k(QA)^k = (QA)^{k+1}", qak * bk * qak, qa.pow(k + 1));
    ExactMatrix residual = bkak - bkak * bkak * s;
    rep.add("B^kA^k - (B^kA^k)^2S = B^k(QA)^k", residual, bk * qak);
    if (inv.residual_nilpotent) {
        rep.add_flag("B^kA^k - (B^kA^k)^2S nilpotent", residual.is_nilpotent());
    } else {
        rep.notes.emplace_back("nilpotency", "skipped: ATA - A is not nilpotent");
    }
    return rep;
}

IdentityReport gdm_converse(const ConstraintPair& p, const GDInverseData& inv) {
    if (!inv.commutes || !inv.inner)
        throw Error("invalid-inverse", "converse construction needs T'B^kA^k = B^kA^kT' and T'B^kA^kT' = T'");
    const std::size_t k = p.k;
    const ExactMatrix& a = p.a;
    const ExactMatrix& t = inv.t;
    ExactMatrix ak = a.pow(k), bk = p.b.pow(k);
    ExactMatrix bkak = bk * ak;
    ExactMatrix s = ak * t.pow(k + 1);
    ExactMatrix aktk = ak * t.pow(k);
    ExactMatrix as = a * s;
    ExactMatrix diff = a - a * as;  // A - A^2 S'

    IdentityReport rep;
    rep.construction = "converse";
    rep.add("S'A = A^kT'^k", s * a, aktk);
    rep.add("AS' = A^kT'^k", as, aktk);
    rep.add("S'AS' = S'", s * as, s);
    rep.add("AS' = S' (as written, informational)", as, s, false);
    ExactMatrix diff_pow = ExactMatrix::identity(a.rows());
    ExactMatrix a_pow = ExactMatrix::identity(a.rows());
    for (std::size_t m = 1; m <= 2 * k + 2; ++m) {
        diff_pow = diff_pow * diff;
        a_pow = a_pow * a;
        rep.add("(A-A^2S')^" + std::to_string(m) + " = A^" + std::to_string(m) + "-A^" +
                    std::to_string(m + 1) + "S'",
                diff_pow, a_pow - a_pow * as);
    }
    ExactMatrix dk = diff.pow(k);
    rep.add("(A-A^2S')^kB^k(A-A^2S')^k = (A-A^2S')^{k+1}", dk * bk * dk, dk * diff);
    ExactMatrix residual = bkak - bkak * bkak * s;
    rep.add("B^k(A-A^2S')^k = B^kA^k - (B^kA^k)^2S'", bk * dk, residual);
    if (inv.residual_nilpotent) {
        rep.add_flag("A - A^2S' nilpotent", diff.is_nilpotent());
        rep.add_flag("B^kA^k - (B^kA^k)^2S' nilpotent", residual.is_nilpotent());
    } else {
        rep.notes.emplace_back("nilpotency", "skipped: T' residual is not nilpotent");
    }
    return rep;
}

const std::vector<std::string>& pair_families() {
    static const std::vector<std::string> names = {"solve_k1", "invertible_root", "nilpotent", "mixed"};
    return names;
}

namespace {

ExactMatrix random_invertible(Rng& rng, std::size_t n) {
    ExactMatrix d(n, n);
    static const long diag_values[] = {1, -1, 2, -2, 3};
    for (std::size_t i = 0; i < n; ++i) d(i, i) = diag_values[rng.uniform(0, 4)];
    return rng.unimodular(n) * d * rng.unimodular(n);
}

ExactMatrix random_nilpotent(Rng& rng, std::size_t n, std::size_t max_block) {
    ExactMatrix a(n, n);
    std::size_t start = 0;
    while (start < n) {
        std::size_t size = std::min<std::size_t>(n - start, static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_block))));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) a(start + i, start + j) = rng.uniform(-2, 2);
        start += size;
    }
    return a;
}

/// Solves A X A = A^2 for X; free unknowns are drawn from the generator.
ExactMatrix solve_inner_equation(const ExactMatrix& a, Rng& rng) {
    const std::size_t n = a.rows();
    const std::size_t unknowns = n * n;
    ExactMatrix system(unknowns, unknowns + 1);
    ExactMatrix a2 = a * a;
    // row (i, j), unknown (p, q): coefficient A(i, p) A(q, j)
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t row = i * n + j;
            for (std::size_t p = 0; p < n; ++p) {
                if (a(i, p).is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q) {
                    if (a(q, j).is_zero()) continue;
                    system(row, p * n + q) = a(i, p) * a(q, j);
                }
            }
            system(row, unknowns) = a2(i, j);
        }
    std::vector<std::size_t> pivots;
    ExactMatrix r = system.rref(&pivots);
    if (!pivots.empty() && pivots.back() == unknowns)
        throw Error("inconsistent-family", "A X A = A^2 has no solution");
    std::vector<bool> is_pivot(unknowns, false);
    for (auto pv : pivots) is_pivot[pv] = true;
    std::vector<GaussianRational> x(unknowns);
    for (std::size_t v = 0; v < unknowns; ++v)
        if (!is_pivot[v]) x[v] = rng.uniform(-2, 2);
    for (std::size_t row = 0; row < pivots.size(); ++row) {
        GaussianRational value = r(row, unknowns);
        for (std::size_t v = pivots[row] + 1; v < unknowns; ++v)
            if (!is_pivot[v] && !r(row, v).is_zero()) value -= r(row, v) * x[v];
        x[pivots[row]] = value;
    }
    ExactMatrix b(n, n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) b(p, q) = x[p * n + q];
    return b;
}

ConstraintPair nilpotent_pair(std::size_t k, std::size_t n, Rng& rng) {
    ConstraintPair p;
    p.k = k;
    p.a = random_nilpotent(rng, n, k + 1);
    p.b = p.a;
    return p;
}

}  // namespace

ConstraintPair invertible_root_pair(std::size_t k, const ExactMatrix& root) {
    if (k == 0) throw Error("inconsistent-family", "k must be positive");
    ConstraintPair p;
    p.k = k;
    p.family = "invertible_root";
    p.a = root.inverse().pow(k);
    p.b = root.pow(k - 1);  // k = 1 gives B = I
    return p;
}

ConstraintPair generate_pair(std::size_t k, const std::string& family, std::uint64_t seed) {
    if (k == 0) throw Error("inconsistent-family", "k must be positive");
    Rng rng(seed * 1000003ULL + k * 7919ULL + std::hash<std::string>{}(family) % 997);
    ConstraintPair p;
    if (family == "solve_k1") {
        if (k != 1) throw Error("inconsistent-family", "solve_k1 only supports k = 1");
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, 6));
        std::size_t r = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(n)));
        p.k = 1;
        p.a = rng.matrix(n, r, 2) * rng.matrix(r, n, 2);
        p.b = solve_inner_equation(p.a, rng);
    } else if (family == "invertible_root") {
        std::size_t n = static_cast<std::size_t>(rng.uniform(2, k >= 3 ? 5 : 6));
        p = invertible_root_pair(k, random_invertible(rng, n));
    } else if (family == "nilpotent") {
        p = nilpotent_pair(k, static_cast<std::size_t>(rng.uniform(2, 8)), rng);
    } else if (family == "mixed") {
        std::size_t n1 = static_cast<std::size_t>(rng.uniform(1, k >= 3 ? 3 : 4));
        std::size_t n2 = static_cast<std::size_t>(rng.uniform(1, 4));
        ConstraintPair inv = invertible_root_pair(k, random_invertible(rng, n1));
        ConstraintPair nil = nilpotent_pair(k, n2, rng);
        p.k = k;
        p.a = ExactMatrix::direct_sum(inv.a, nil.a);
        p.b = ExactMatrix::direct_sum(inv.b, nil.b);
    } else {
        throw Error("unknown-family", "no pair family named '" + family + "'");
    }
    p.family = family;
    p.seed = seed;
    if (!p.satisfies_constraint())
        throw Error("constraint-violated", "generated pair fails A^kB^kA^k = A^{k+1} (" + family + ")");
    return p;
}

}  // namespace opspec
