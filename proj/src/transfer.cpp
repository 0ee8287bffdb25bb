#include "opspec/transfer.hpp"

#include "opspec/dsl.hpp"
#include "opspec/error.hpp"
#include "opspec/random.hpp"
#include "opspec/spectra.hpp"

namespace opspec {

namespace {

// Aligned piece of a diagonal operator: finitely many entries, a constant
// of infinite multiplicity, or an infinite family (harmonic, geometric).
struct Block {
    enum Kind { Finite, Const, Family } kind;
    std::vector<GaussianRational> values;
    ExprPtr family;
};

void flatten(const ExprPtr& e, std::vector<Block>& out) {
    auto push_finite = [&](const GaussianRational& v) {
        if (out.empty() || out.back().kind != Block::Finite) out.push_back({Block::Finite, {}, nullptr});
        out.back().values.push_back(v);
    };
    if (e->kind == ExprKind::DirectSum) {
        flatten(e->left, out);
        flatten(e->right, out);
        return;
    }
    if (e->kind != ExprKind::Diag) throw Error("unsupported-pair", "not a diagonal operator: " + print_expr(*e));
    if (e->diag_kind != DiagKind::List) {
        out.push_back({Block::Family, {}, e});
        return;
    }
    for (const auto& entry : e->entries) {
        if (entry.multiplicity.is_inf()) {
            out.push_back({Block::Const, {entry.value}, nullptr});
            continue;
        }
        for (std::uint64_t i = 0; i < entry.multiplicity.value(); ++i) push_finite(entry.value);
    }
}

bool entry_ok(const GaussianRational& a, const GaussianRational& b, std::size_t k) {
    return pow(a, 2 * k) * pow(b, k) == pow(a, k + 1);
}

ExprPtr block_expr(const Block& b) {
    if (b.kind == Block::Family) return b.family;
    std::vector<DiagEntry> entries;
    if (b.kind == Block::Const) entries.push_back({b.values[0], ExtNat::inf()});
    for (const auto& v : b.kind == Block::Finite ? b.values : std::vector<GaussianRational>{}) entries.push_back({v, 1});
    return make_diag_list(entries);
}

Block product(const Block& a, const Block& b, std::size_t k, std::size_t index) {
    auto violated = [&] { return Error("constraint-violated", "diagonal block " + std::to_string(index)); };
    if (a.kind == Block::Family && b.kind == Block::Family)
        throw Error("unsupported-pair", "product of two infinite families in block " + std::to_string(index));
    if (a.kind == Block::Family) {
        // Entries of A vary and never vanish, so only B = I with k = 1 fits.
        if (b.kind != Block::Const) throw Error("unsupported-pair", "misaligned block " + std::to_string(index));
        if (k != 1 || b.values[0] != GaussianRational(1)) throw violated();
        return a;
    }
    if (b.kind == Block::Family) {
        if (a.kind != Block::Const) throw Error("unsupported-pair", "misaligned block " + std::to_string(index));
        if (!a.values[0].is_zero()) throw violated();
        return {Block::Const, {GaussianRational(0)}, nullptr};
    }
    if (a.kind != b.kind || a.values.size() != b.values.size())
        throw Error("unsupported-pair", "misaligned block " + std::to_string(index));
    Block out{a.kind, {}, nullptr};
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (!entry_ok(a.values[i], b.values[i], k)) throw violated();
        out.values.push_back(pow(b.values[i], k) * pow(a.values[i], k));
    }
    return out;
}

}  // namespace

bool is_meromorphic(const ExprPtr& e) {
    SpectraEngine engine(e);
    Region origin = Region::points({0});
    return subset(acc(engine.spectrum("sigma")), origin) && subset(engine.spectrum("bb"), origin);
}

TransferReport verify_meromorphic_transfer(const ExprPtr& a, const ExprPtr& b, std::size_t k) {
    if (k == 0) throw Error("unsupported-pair", "k must be positive");
    std::vector<Block> ba, bb;
    flatten(a, ba);
    flatten(b, bb);
    if (ba.size() != bb.size()) throw Error("unsupported-pair", "block layouts differ");
    TransferReport report;
    report.k = k;
    report.blocks = ba.size();
    for (std::size_t i = 0; i < ba.size(); ++i) {
        ExprPtr piece = block_expr(product(ba[i], bb[i], k, i));
        report.product = report.product ? make_dsum(report.product, piece) : piece;
    }
    report.a_meromorphic = is_meromorphic(a);
    report.product_meromorphic = is_meromorphic(report.product);
    return report;
}

std::vector<std::pair<ExprPtr, ExprPtr>> certified_diagonal_pairs(std::size_t k) {
    std::vector<std::pair<ExprPtr, ExprPtr>> out;
    auto list = [](std::vector<DiagEntry> e) { return make_diag_list(std::move(e)); };
    const GaussianRational one(1), zero(0);
    if (k == 1) {
        out.emplace_back(make_diag_harmonic(), list({{one, ExtNat::inf()}}));
        out.emplace_back(make_diag_geometric(Rational(1, 2)), list({{one, ExtNat::inf()}}));
        out.emplace_back(make_dsum(make_diag_harmonic(), list({{zero, ExtNat::inf()}})),
                         make_dsum(list({{one, ExtNat::inf()}}), make_diag_geometric(Rational(1, 3))));
    }
    out.emplace_back(list({{zero, ExtNat::inf()}}), make_diag_harmonic());
    out.emplace_back(make_dsum(list({{zero, ExtNat::inf()}}), list({{one, ExtNat::inf()}})),
                     make_dsum(make_diag_geometric(Rational(-1, 2)), list({{one, ExtNat::inf()}})));
    // a = c^{-k}, b = c^{k-1} on every nonzero entry; zero entries take any b.
    Rng rng(1000 + k);
    while (out.size() < 12) {
        std::vector<DiagEntry> ea, eb;
        for (long n = rng.uniform(1, 4); n > 0; --n) {
            std::uint64_t mult = static_cast<std::uint64_t>(rng.uniform(1, 2));
            if (rng.coin(25)) {
                ea.push_back({zero, mult});
                eb.push_back({GaussianRational(rng.uniform(-3, 3)), mult});
                continue;
            }
            Rational c(rng.uniform(1, 4), rng.uniform(1, 3));
            c.canonicalize();
            if (rng.coin(30)) c = -c;
            ea.push_back({GaussianRational(pow(GaussianRational(c), k).inverse()), mult});
            eb.push_back({pow(GaussianRational(c), k - 1), mult});
        }
        Rational c(rng.uniform(1, 3), rng.uniform(1, 3));
        c.canonicalize();
        ea.push_back({pow(GaussianRational(c), k).inverse(), ExtNat::inf()});
        eb.push_back({pow(GaussianRational(c), k - 1), ExtNat::inf()});
        ExprPtr a = list(ea), b = list(eb);
        if (rng.coin(50)) {
            a = make_dsum(a, list({{zero, ExtNat::inf()}}));
            b = make_dsum(b, make_diag_harmonic());
        }
        out.emplace_back(a, b);
    }
    return out;
}

}  // namespace opspec
