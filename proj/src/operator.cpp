#include "opspec/operator.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "opspec/error.hpp"

namespace opspec {

// ---------------------------------------------------------------------------
// Classification

namespace {

auto as_tuple(const Classification& c) {
    auto n = [](const ExtNat& e) { return std::make_pair(e.is_inf(), e.value()); };
    return std::make_tuple(n(c.alpha), n(c.beta), c.range_closed, n(c.ascent), n(c.descent), n(c.alpha_ev),
                           n(c.beta_ev), c.powers_range_closed, c.svep, c.svep_adj, c.admits_gkd, c.admits_gkrd,
                           c.admits_gkmd);
}

}  // namespace

Classification combine(const Classification& a, const Classification& b) {
    Classification c;
    c.alpha = a.alpha + b.alpha;
    c.beta = a.beta + b.beta;
    c.range_closed = a.range_closed && b.range_closed;
    c.ascent = max(a.ascent, b.ascent);
    c.descent = max(a.descent, b.descent);
    c.alpha_ev = a.alpha_ev + b.alpha_ev;
    c.beta_ev = a.beta_ev + b.beta_ev;
    c.powers_range_closed = a.powers_range_closed && b.powers_range_closed;
    c.svep = a.svep && b.svep;
    c.svep_adj = a.svep_adj && b.svep_adj;
    c.admits_gkd = a.admits_gkd && b.admits_gkd;
    c.admits_gkrd = a.admits_gkrd && b.admits_gkrd;
    c.admits_gkmd = a.admits_gkmd && b.admits_gkmd;
    return c;
}

bool operator==(const Classification& a, const Classification& b) { return as_tuple(a) == as_tuple(b); }
bool operator<(const Classification& a, const Classification& b) { return as_tuple(a) < as_tuple(b); }

std::vector<std::string> Classification::invariant_violations() const {
    std::vector<std::string> out;
    if (beta.finite() && !range_closed) out.emplace_back("finite beta with non-closed range");
    if (ascent.finite() && descent.finite() && !(ascent == descent)) out.emplace_back("finite ascent != descent");
    if (ascent.finite() && !svep) out.emplace_back("finite ascent without SVEP");
    if (descent.finite() && !svep_adj) out.emplace_back("finite descent without SVEP of the adjoint");
    if (admits_gkd && !admits_gkrd) out.emplace_back("GKD without GKRD");
    if (admits_gkrd && !admits_gkmd) out.emplace_back("GKRD without GKMD");
    if (alpha < alpha_ev) out.emplace_back("alpha_ev > alpha");
    if (beta < beta_ev) out.emplace_back("beta_ev > beta");
    return out;
}

std::string Classification::str() const {
    auto b = [](bool v) { return v ? "T" : "F"; };
    return "alpha=" + alpha.str() + " beta=" + beta.str() + " rc=" + b(range_closed) + " p=" + ascent.str() +
           " q=" + descent.str() + " alpha_ev=" + alpha_ev.str() + " beta_ev=" + beta_ev.str() +
           " prc=" + b(powers_range_closed) + " svep=" + b(svep) + " svep*=" + b(svep_adj) +
           " gkd=" + b(admits_gkd) + " gkrd=" + b(admits_gkrd) + " gkmd=" + b(admits_gkmd);
}

namespace {

const ExtNat kInf = ExtNat::inf();

/// Isolated eigenvalue with finite-dimensional or stable splitting.
Classification eigen_point(ExtNat multiplicity, ExtNat index) {
    Classification c;
    c.alpha = multiplicity;
    c.beta = multiplicity;
    c.ascent = index;
    c.descent = index;
    return c;
}

/// Limit point of the diagonal entries, carrying `multiplicity` as an eigenvalue.
Classification diag_limit(ExtNat multiplicity) {
    Classification c;
    c.alpha = multiplicity;
    c.beta = kInf;
    c.range_closed = false;
    c.ascent = multiplicity == ExtNat(0) ? ExtNat(0) : ExtNat(1);
    c.descent = kInf;
    c.beta_ev = kInf;
    c.powers_range_closed = false;
    c.admits_gkd = false;
    return c;
}

Classification shift_disc(bool backward) {
    Classification c;
    c.alpha = backward ? 1 : 0;
    c.beta = backward ? 0 : 1;
    c.ascent = backward ? kInf : ExtNat(0);
    c.descent = backward ? ExtNat(0) : kInf;
    c.alpha_ev = c.alpha;
    c.beta_ev = c.beta;
    c.svep = !backward;
    c.svep_adj = backward;
    return c;
}

Classification shift_circle() {
    Classification c;
    c.beta = kInf;
    c.range_closed = false;
    c.descent = kInf;
    c.beta_ev = kInf;
    c.powers_range_closed = false;
    c.admits_gkd = c.admits_gkrd = c.admits_gkmd = false;
    return c;
}

Classification shift_quasi(bool backward) {
    Classification c;
    c.alpha = backward ? 1 : 0;
    c.beta = kInf;
    c.range_closed = false;
    c.ascent = backward ? kInf : ExtNat(0);
    c.descent = kInf;
    c.alpha_ev = c.alpha;
    c.beta_ev = kInf;
    c.powers_range_closed = false;
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Expression construction

namespace {

std::shared_ptr<Expr> node(ExprKind kind) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    return e;
}

Rational abs_rational(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

}  // namespace

ExprPtr make_matrix(ExactMatrix m) {
    if (!m.square() || m.rows() == 0) throw Error("shape-mismatch", "matrix atom must be square and non-empty");
    auto e = node(ExprKind::Matrix);
    e->matrix = std::move(m);
    return e;
}

ExprPtr make_diag_harmonic() {
    auto e = node(ExprKind::Diag);
    e->diag_kind = DiagKind::Harmonic;
    return e;
}

ExprPtr make_diag_geometric(Rational q) {
    Rational a = abs_rational(q);
    if (sgn(q) == 0 || a >= 1) throw Error("unsupported-atom", "diag(geometric(q)) needs 0 < |q| < 1");
    auto e = node(ExprKind::Diag);
    e->diag_kind = DiagKind::Geometric;
    e->parameter = std::move(q);
    return e;
}

ExprPtr make_diag_list(std::vector<DiagEntry> entries) {
    if (entries.empty()) throw Error("unsupported-atom", "diag(list[]) needs at least one entry");
    for (const auto& d : entries)
        if (d.multiplicity == ExtNat(0)) throw Error("unsupported-atom", "diagonal multiplicity must be positive");
    auto e = node(ExprKind::Diag);
    e->diag_kind = DiagKind::List;
    e->entries = std::move(entries);
    return e;
}

ExprPtr make_shift_const(Rational w) {
    if (sgn(w) == 0) throw Error("unsupported-atom", "shift(const(0)) is the zero operator");
    auto e = node(ExprKind::Shift);
    e->weight_kind = WeightKind::Const;
    e->parameter = std::move(w);
    return e;
}

ExprPtr make_shift_geometric(Rational q) {
    Rational a = abs_rational(q);
    if (sgn(q) == 0 || a >= 1)
        throw Error("unsupported-atom", "shift(geometric(q)) needs 0 < |q| < 1 (weights q^n)");
    auto e = node(ExprKind::Shift);
    e->weight_kind = WeightKind::Geometric;
    e->parameter = std::move(q);
    return e;
}

ExprPtr make_shift_invfact() {
    auto e = node(ExprKind::Shift);
    e->weight_kind = WeightKind::InvFact;
    return e;
}

ExprPtr make_jordan(GaussianRational lambda, std::size_t size) {
    if (size == 0) throw Error("unsupported-atom", "Jordan block of size 0");
    auto e = node(ExprKind::Jordan);
    e->scalar = std::move(lambda);
    e->size = size;
    return e;
}

ExprPtr make_adj(ExprPtr inner) {
    auto e = node(ExprKind::Adj);
    e->left = std::move(inner);
    return e;
}

ExprPtr make_scale(GaussianRational c, ExprPtr inner) {
    if (c.is_zero()) throw Error("unsupported-atom", "scaling by 0");
    auto e = node(ExprKind::Scale);
    e->scalar = std::move(c);
    e->left = std::move(inner);
    return e;
}

ExprPtr make_translate(GaussianRational d, ExprPtr inner) {
    auto e = node(ExprKind::Translate);
    e->scalar = std::move(d);
    e->left = std::move(inner);
    return e;
}

ExprPtr make_dsum(ExprPtr a, ExprPtr b) {
    auto e = node(ExprKind::DirectSum);
    e->left = std::move(a);
    e->right = std::move(b);
    return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::Matrix:
            return a.matrix.rows() == b.matrix.rows() && a.matrix == b.matrix;
        case ExprKind::Diag:
            if (a.diag_kind != b.diag_kind || a.parameter != b.parameter) return false;
            if (a.entries.size() != b.entries.size()) return false;
            for (std::size_t i = 0; i < a.entries.size(); ++i)
                if (a.entries[i].value != b.entries[i].value || !(a.entries[i].multiplicity == b.entries[i].multiplicity))
                    return false;
            return true;
        case ExprKind::Shift:
            return a.weight_kind == b.weight_kind && a.parameter == b.parameter;
        case ExprKind::Jordan:
            return a.scalar == b.scalar && a.size == b.size;
        case ExprKind::Adj:
            return expr_equal(*a.left, *b.left);
        case ExprKind::Scale:
        case ExprKind::Translate:
            return a.scalar == b.scalar && expr_equal(*a.left, *b.left);
        case ExprKind::DirectSum:
            return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Atoms placed in the plane: the operator c * A + d

namespace {

struct Atom {
    enum class Kind { Eigen, Diag, ShiftConst, ShiftQuasi };
    Kind kind = Kind::Eigen;
    bool backward = false;
    std::vector<EigenData> eigen;      // Eigen: matrices and Jordan blocks
    std::vector<DiagEntry> entries;    // Diag
    std::vector<Sequence> seqs;        // Diag, local coordinates, limit 0
    Rational radius2{0};               // ShiftConst
    GaussianRational c{1};
    GaussianRational d{0};

    GaussianRational local(const GaussianRational& z) const { return (z - d) / c; }
    GaussianRational global(const GaussianRational& w) const { return c * w + d; }
    Circle circle() const { return {d, c.norm() * radius2}; }
};

std::vector<Sequence> diag_sequences(const Expr& e) {
    if (e.diag_kind == DiagKind::Harmonic) return {Sequence::harmonic(0, 1, 1)};
    if (e.diag_kind == DiagKind::List) return {};
    const Rational& q = e.parameter;
    if (sgn(q) > 0) return {Sequence::geometric(q, 0, 1, 1)};
    // q^n splits into the even powers (q^2)^m and the odd powers q (q^2)^m
    Rational q2 = q * q;
    return {Sequence::geometric(q2, 0, 1, 1), Sequence::geometric(q2, 0, q, 0)};
}

std::vector<DiagEntry> merged_entries(std::vector<DiagEntry> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    std::vector<DiagEntry> out;
    for (auto& d : entries) {
        if (!out.empty() && out.back().value == d.value)
            out.back().multiplicity = out.back().multiplicity + d.multiplicity;
        else
            out.push_back(std::move(d));
    }
    return out;
}

/// Collects atoms so that the operator is the direct sum of c * A^(adj) + d.
void compile(const Expr& e, const GaussianRational& c, const GaussianRational& d, bool adj, std::vector<Atom>& out) {
    auto conj_if = [&](const GaussianRational& z) { return adj ? z.conj() : z; };
    switch (e.kind) {
        case ExprKind::Adj:
            compile(*e.left, c, d, !adj, out);
            return;
        case ExprKind::Scale:
            compile(*e.left, c * conj_if(e.scalar), d, adj, out);
            return;
        case ExprKind::Translate:
            compile(*e.left, c, d + c * conj_if(e.scalar), adj, out);
            return;
        case ExprKind::DirectSum:
            compile(*e.left, c, d, adj, out);
            compile(*e.right, c, d, adj, out);
            return;
        default:
            break;
    }
    Atom a;
    a.c = c;
    a.d = d;
    switch (e.kind) {
        case ExprKind::Matrix:
            a.kind = Atom::Kind::Eigen;
            a.eigen = certified_eigenvalues(adj ? e.matrix.conjugate_transpose() : e.matrix);
            break;
        case ExprKind::Jordan:
            a.kind = Atom::Kind::Eigen;
            a.eigen = {EigenData{conj_if(e.scalar), e.size, 1, e.size}};
            break;
        case ExprKind::Diag: {
            a.kind = Atom::Kind::Diag;
            std::vector<DiagEntry> entries = e.entries;
            for (auto& x : entries) x.value = conj_if(x.value);
            a.entries = merged_entries(std::move(entries));
            a.seqs = diag_sequences(e);  // real families are self-conjugate
            break;
        }
        case ExprKind::Shift:
            a.backward = adj;
            if (e.weight_kind == WeightKind::Const) {
                a.kind = Atom::Kind::ShiftConst;
                a.radius2 = e.parameter * e.parameter;
            } else {
                a.kind = Atom::Kind::ShiftQuasi;
            }
            break;
        default:
            break;
    }
    out.push_back(std::move(a));
}

Classification classify_atom_at(const Atom& a, const GaussianRational& z) {
    GaussianRational w = a.local(z);
    switch (a.kind) {
        case Atom::Kind::Eigen:
            for (const auto& ev : a.eigen)
                if (ev.value == w) return eigen_point(ev.geometric, ev.index);
            return Classification::resolvent();
        case Atom::Kind::Diag: {
            ExtNat mult = 0;
            for (const auto& entry : a.entries)
                if (entry.value == w) mult = entry.multiplicity;
            if (!a.seqs.empty() && w.is_zero()) return diag_limit(mult);
            for (const auto& s : a.seqs)
                if (s.contains(w)) mult = mult + 1;
            if (mult == ExtNat(0)) return Classification::resolvent();
            return eigen_point(mult, 1);
        }
        case Atom::Kind::ShiftConst: {
            Side side = side_of(Circle{0, a.radius2}, w);
            if (side == kIn) return shift_disc(a.backward);
            if (side == kOn) return shift_circle();
            return Classification::resolvent();
        }
        case Atom::Kind::ShiftQuasi:
            return w.is_zero() ? shift_quasi(a.backward) : Classification::resolvent();
    }
    return Classification::resolvent();
}

Classification classify_atoms(const std::vector<Atom>& atoms, const GaussianRational& z) {
    Classification c;
    for (const auto& a : atoms) c = combine(c, classify_atom_at(a, z));
    return c;
}

/// Classification on a face, arc or vertex that contains no discrete support point.
Classification classify_generic(const std::vector<Atom>& atoms, const Arrangement& arr,
                                const std::vector<std::uint8_t>& signs) {
    Classification c;
    for (const auto& a : atoms) {
        if (a.kind != Atom::Kind::ShiftConst) continue;
        std::uint8_t side = signs[arr.index_of(a.circle())];
        if (side == kIn) c = combine(c, shift_disc(a.backward));
        if (side == kOn) c = combine(c, shift_circle());
    }
    return c;
}

struct Support {
    std::vector<Circle> circles;
    PointSet points;
    std::vector<Sequence> seqs;
};

Support support_of(const std::vector<Atom>& atoms) {
    Support s;
    for (const auto& a : atoms) {
        switch (a.kind) {
            case Atom::Kind::Eigen:
                for (const auto& ev : a.eigen) s.points.push_back(a.global(ev.value));
                break;
            case Atom::Kind::Diag:
                for (const auto& entry : a.entries) s.points.push_back(a.global(entry.value));
                for (const auto& q : a.seqs) s.seqs.push_back(q.mapped(a.c, a.d));
                if (!a.seqs.empty()) s.points.push_back(a.d);
                break;
            case Atom::Kind::ShiftConst:
                s.circles.push_back(a.circle());
                break;
            case Atom::Kind::ShiftQuasi:
                s.points.push_back(a.d);
                break;
        }
    }
    std::sort(s.points.begin(), s.points.end());
    s.points.erase(std::unique(s.points.begin(), s.points.end()), s.points.end());
    std::vector<Sequence> unique;
    for (const auto& q : s.seqs)
        if (std::find(unique.begin(), unique.end(), q) == unique.end()) unique.push_back(q);
    s.seqs = unique;
    return s;
}

constexpr long kHeadLimit = 200000;

}  // namespace

Classification SpectralPicture::lookup(const GaussianRational& z) const {
    for (const auto& cell : cells)
        if (member(cell.region, z)) return cell.cls;
    return default_cell;
}

Classification classify(const Expr& e, const GaussianRational& z) {
    std::vector<Atom> atoms;
    compile(e, 1, 0, false, atoms);
    return classify_atoms(atoms, z);
}

SpectralPicture picture(const Expr& e) {
    std::vector<Atom> atoms;
    compile(e, 1, 0, false, atoms);
    Support sup = support_of(atoms);
    Arrangement arr(sup.circles);

    // Split every sequence into explicit head points and a tail on which the
    // classification is constant; repeat until no tail meets an explicit point.
    std::vector<long> thresholds;
    for (const auto& s : sup.seqs) {
        long t = s.start();
        for (const auto& c : arr.circles()) t = std::max(t, s.eventual_side(c).first);
        for (const auto& p : sup.points)
            if (auto idx = s.index_of(p)) t = std::max(t, *idx + 1);
        for (const auto& o : sup.seqs)
            if (!(o == s)) t = std::max(t, compare_tail(s, o).threshold);
        thresholds.push_back(t);
    }
    PointSet explicit_points;
    for (bool changed = true; changed;) {
        changed = false;
        explicit_points = sup.points;
        for (std::size_t i = 0; i < sup.seqs.size(); ++i) {
            if (thresholds[i] - sup.seqs[i].start() > kHeadLimit)
                throw Error("degenerate-arrangement", "sequence head too long: " + sup.seqs[i].str());
            for (long n = sup.seqs[i].start(); n < thresholds[i]; ++n) explicit_points.push_back(sup.seqs[i].point(n));
        }
        std::sort(explicit_points.begin(), explicit_points.end());
        explicit_points.erase(std::unique(explicit_points.begin(), explicit_points.end()), explicit_points.end());
        for (std::size_t i = 0; i < sup.seqs.size(); ++i)
            for (const auto& p : explicit_points)
                if (auto idx = sup.seqs[i].index_of(p); idx && *idx >= thresholds[i]) {
                    thresholds[i] = *idx + 1;
                    changed = true;
                }
    }
    std::vector<Sequence> tails;
    for (std::size_t i = 0; i < sup.seqs.size(); ++i) {
        Sequence t = sup.seqs[i].tail_from(thresholds[i]);
        if (std::find(tails.begin(), tails.end(), t) == tails.end()) tails.push_back(t);
    }

    std::map<Classification, std::vector<Piece>> groups;
    auto add = [&](const Classification& cls, Piece piece) {
        if (!cls.is_resolvent()) groups[cls].push_back(std::move(piece));
    };

    for (const auto& p : explicit_points) add(classify_atoms(atoms, p), Piece{PointSet{p}, {}, {}});

    for (const auto& t : tails) {
        std::vector<Sequence> inner;
        for (const auto& o : tails)
            if (!(o == t) && compare_tail(o, t).contained) inner.push_back(o);
        long n = t.start();
        auto in_inner = [&](long m) {
            return std::any_of(inner.begin(), inner.end(), [&](const Sequence& o) { return o.contains(t.point(m)); });
        };
        while (in_inner(n)) ++n;
        add(classify_atoms(atoms, t.point(n)), Piece{t, {}, inner});
    }

    auto cube = [&](const std::vector<std::uint8_t>& signs) {
        CellShape shape;
        for (std::size_t k = 0; k < signs.size(); ++k) shape.constraints.push_back({arr.circles()[k], signs[k]});
        Piece piece{shape, {}, {}};
        for (const auto& p : explicit_points)
            if (arr.signs_of(p) == signs) piece.except_points.push_back(p);
        for (const auto& t : tails) {
            std::vector<std::uint8_t> tail_signs;
            for (const auto& c : arr.circles()) tail_signs.push_back(t.eventual_side(c).second);
            if (tail_signs == signs) piece.except_seqs.push_back(t);
        }
        return piece;
    };
    if (!arr.circles().empty()) {
        for (const auto& v : arr.faces()) add(classify_generic(atoms, arr, v), cube(v));
        for (const auto& v : arr.arcs()) add(classify_generic(atoms, arr, v), cube(v));
        std::vector<std::vector<std::uint8_t>> seen;
        for (const auto& v : arr.vertices()) {
            if (std::find(seen.begin(), seen.end(), v.signs) != seen.end()) continue;
            seen.push_back(v.signs);
            add(classify_generic(atoms, arr, v.signs), cube(v.signs));
        }
    }

    SpectralPicture pic;
    for (auto& [cls, pieces] : groups) {
        Region r(std::move(pieces));
        if (!r.empty()) pic.cells.push_back({std::move(r), cls});
    }
    return pic;
}

}  // namespace opspec
